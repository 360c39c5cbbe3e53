#include "nupar/transition.hpp"

#include <algorithm>

namespace nupar {

std::string Transition::str() const {
  switch (kind) {
    case TKind::Shift: return "shift";
    case TKind::Swap: return "swap";
    case TKind::LeftArc: return "left-arc(" + label + ")";
    case TKind::RightArc: return "right-arc(" + label + ")";
  }
  return "?";
}

Configuration initial_config(int n) {
  if (n < 1) throw DataError("empty sentence rejected (n = " + std::to_string(n) + ")");
  Configuration c;
  c.n = n;
  for (int i = 1; i <= n; ++i) c.buffer.push_back(i);
  c.buffer.push_back(kRootItem);
  return c;
}

bool is_terminal(const Configuration& c) {
  return c.stack.empty() && c.buffer.size() == 1 && c.buffer.front() == kRootItem;
}

bool legal(const Configuration& c, const Transition& t) {
  switch (t.kind) {
    case TKind::Shift:
      return !c.buffer.empty() && c.b0() != kRootItem;
    case TKind::LeftArc: {
      if (c.stack.empty() || c.buffer.empty()) return false;
      if (c.b0() == kRootItem)
        return c.stack.size() == 1 && t.label == kRootLabel;
      return t.label != kRootLabel;
    }
    case TKind::RightArc:
      return c.stack.size() >= 2 && t.label != kRootLabel;
    case TKind::Swap:
      return c.stack.size() >= 2 && !c.swapped.count({c.s1(), c.s0()});
  }
  return false;
}

bool legal_kind(const Configuration& c, TKind kind) {
  switch (kind) {
    case TKind::Shift:
    case TKind::Swap:
      return legal(c, Transition{kind, ""});
    case TKind::LeftArc: {
      if (c.stack.empty() || c.buffer.empty()) return false;
      if (c.b0() == kRootItem) return c.stack.size() == 1;  // only "root" fits
      return true;
    }
    case TKind::RightArc:
      return c.stack.size() >= 2;
  }
  return false;
}

void apply_inplace(Configuration& c, const Transition& t) {
  if (!legal(c, t))
    throw ContractViolation("illegal transition " + t.str());
  switch (t.kind) {
    case TKind::Shift:
      c.stack.push_back(c.buffer.front());
      c.buffer.pop_front();
      break;
    case TKind::LeftArc:
      c.arcs.push_back({c.b0(), c.s0(), t.label});
      c.stack.pop_back();
      break;
    case TKind::RightArc:
      c.arcs.push_back({c.s1(), c.s0(), t.label});
      c.stack.pop_back();
      break;
    case TKind::Swap: {
      int moved = c.s1();
      c.swapped.insert({moved, c.s0()});
      c.stack.erase(c.stack.end() - 2);
      c.buffer.push_front(moved);
      break;
    }
  }
}

Configuration apply(const Configuration& c, const Transition& t) {
  Configuration out = c;
  apply_inplace(out, t);
  return out;
}

std::vector<int> projective_order(const DepTree& tree) {
  const int n = static_cast<int>(tree.size());
  std::vector<int> mpo(n + 1, 0);
  int counter = 0;
  // In-order traversal: children left of the head first (by position),
  // then the head, then children right of it.
  auto visit = [&](auto&& self, int node) -> void {
    for (int ch : tree.children[node])
      if (ch < node) self(self, ch);
    if (node != 0) mpo[node] = ++counter;
    for (int ch : tree.children[node])
      if (ch > node) self(self, ch);
  };
  // children[0] holds the root token(s); traversal starts from the
  // artificial root so disconnected inputs still get ranks assigned.
  for (int ch : tree.children[0]) visit(visit, ch);
  for (int i = 1; i <= n; ++i)
    if (mpo[i] == 0) mpo[i] = ++counter;  // unreachable tokens rank last
  mpo[0] = n + 1;                         // r comes after everything
  return mpo;
}

std::vector<Transition> static_oracle(const DepTree& tree) {
  const int n = static_cast<int>(tree.size());
  {
    auto violations = validate_tree(tree);
    if (!violations.empty())
      throw DataError("static_oracle on invalid tree: " + violations.front());
  }
  std::vector<int> mpo = projective_order(tree);
  std::vector<int> pending(n + 1, 0);  // unattached gold dependents per head
  for (int i = 1; i <= n; ++i) pending[tree.heads[i - 1]]++;

  // Plain arc-hybrid moves cover projective structure. For reordering, the
  // arc-standard swap oracle over the projective order is simulated on top:
  // its head-final arc ("attach s1 to s0, pop s1") does not exist in this
  // system but is exactly Swap + Shift + RightArc, since the swap/shift
  // pair exchanges the top two stack items.
  Configuration c = initial_config(n);
  std::vector<Transition> seq;
  auto emit = [&](Transition t) {
    if (t.creates_arc()) {
      pending[t.kind == TKind::LeftArc ? c.b0() : c.s1()]--;
    }
    apply_inplace(c, t);
    seq.push_back(std::move(t));
  };
  const size_t bound = 4 * static_cast<size_t>(n) * static_cast<size_t>(n) + 8;
  while (!is_terminal(c)) {
    if (seq.size() > bound)
      throw ContractViolation("static_oracle exceeded the step bound");
    bool chosen = false;
    if (!c.stack.empty()) {
      const int s0 = c.s0();
      const int b0 = c.b0();
      const int head = tree.heads[s0 - 1];
      const bool complete = pending[s0] == 0;
      if (complete && b0 != kRootItem && head == b0) {
        emit({TKind::LeftArc, tree.labels[s0 - 1]});
        chosen = true;
      } else if (complete && b0 == kRootItem && head == 0 && c.stack.size() == 1) {
        emit({TKind::LeftArc, kRootLabel});
        chosen = true;
      } else if (c.stack.size() >= 2) {
        const int s1 = c.s1();
        if (complete && head == s1) {
          emit({TKind::RightArc, tree.labels[s0 - 1]});
          chosen = true;
        } else if (tree.heads[s1 - 1] == s0 && pending[s1] == 0) {
          emit({TKind::Swap, ""});
          emit({TKind::Shift, ""});
          emit({TKind::RightArc, tree.labels[s1 - 1]});
          chosen = true;
        } else if (mpo[s1] > mpo[s0]) {
          emit({TKind::Swap, ""});
          chosen = true;
        }
      }
    }
    if (!chosen) {
      if (c.b0() == kRootItem)
        throw ContractViolation("static_oracle deadlock (buffer exhausted)");
      emit({TKind::Shift, ""});
    }
  }
  return seq;
}

DepTree replay(int n, const std::vector<Transition>& seq) {
  Configuration c = initial_config(n);
  for (const auto& t : seq) apply_inplace(c, t);
  if (!is_terminal(c))
    throw ContractViolation("replay did not reach a terminal configuration");
  std::vector<int> heads(n, -1);
  std::vector<std::string> labels(n);
  for (const auto& a : c.arcs) {
    if (heads[a.dep - 1] != -1)
      throw ContractViolation("replay produced two heads for token " +
                              std::to_string(a.dep));
    heads[a.dep - 1] = a.head;  // kRootItem is 0, which is the tree encoding
    labels[a.dep - 1] = a.label;
  }
  for (int i = 0; i < n; ++i)
    if (heads[i] == -1)
      throw ContractViolation("replay left token " + std::to_string(i + 1) + " unattached");
  return DepTree::build(std::move(heads), std::move(labels));
}

std::string trace_line(const Transition& t, const Configuration& after) {
  std::string out = t.kind == TKind::Shift   ? "shift"
                    : t.kind == TKind::Swap  ? "swap"
                    : t.kind == TKind::LeftArc ? "left-arc"
                                               : "right-arc";
  out += '\t';
  out += t.label.empty() ? "_" : t.label;
  out += "\tS=";
  for (size_t i = 0; i < after.stack.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(after.stack[i]);
  }
  out += "\tB=";
  for (size_t i = 0; i < after.buffer.size(); ++i) {
    if (i) out += ',';
    out += after.buffer[i] == kRootItem ? std::string("r") : std::to_string(after.buffer[i]);
  }
  return out;
}

}  // namespace nupar
