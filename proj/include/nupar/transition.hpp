#pragma once

#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nupar/conllu.hpp"

namespace nupar {

inline constexpr int kRootItem = 0;  // id of the artificial root r
inline constexpr const char* kRootLabel = "root";

enum class TKind { Shift, LeftArc, RightArc, Swap };

struct Transition {
  TKind kind = TKind::Shift;
  std::string label;  // present iff kind creates an arc

  bool creates_arc() const { return kind == TKind::LeftArc || kind == TKind::RightArc; }
  std::string str() const;
};

struct Arc {
  int head = 0;
  int dep = 0;
  std::string label;
};

// Stack/buffer state of the extended arc-hybrid system. Token ids are the
// original positions 1..n; the artificial root r (id 0) sits at the end of
// the buffer and never enters the stack. `swapped` records the ordered
// (s1, s0) pairs already inverted, which bounds every derivation.
struct Configuration {
  int n = 0;
  std::vector<int> stack;   // back() = s0
  std::deque<int> buffer;   // front() = b0, r last
  std::vector<Arc> arcs;
  std::set<std::pair<int, int>> swapped;

  int s0() const { return stack.back(); }
  int s1() const { return stack[stack.size() - 2]; }
  int b0() const { return buffer.front(); }
};

// buffer = [1..n, r]; stack and arcs empty. n >= 1.
Configuration initial_config(int n);

bool is_terminal(const Configuration& c);

// Legality of the four transitions:
//   Shift:    buffer non-empty and b0 != r
//   LeftArc:  stack and buffer non-empty; when b0 = r the stack must hold a
//             single item and the label must be "root" (single-rooted
//             output); otherwise the label must not be "root"
//   RightArc: |stack| >= 2, label not "root"
//   Swap:     |stack| >= 2 and the ordered pair (s1, s0) has not been
//             swapped before in this derivation. Every non-terminal
//             configuration has a legal move, and no derivation can exceed
//             4*n*n transitions (at most n(n-1) swaps, n + #swaps shifts,
//             n arcs).
bool legal(const Configuration& c, const Transition& t);

// Kind-level check used for filtering before label choice: true iff some
// label makes the transition legal.
bool legal_kind(const Configuration& c, TKind kind);

// Applies t in place. Throws ContractViolation when !legal(c, t).
void apply_inplace(Configuration& c, const Transition& t);
Configuration apply(const Configuration& c, const Transition& t);

// Projective order: rank of each token in the in-order traversal of the
// tree (children before/after their head by position). mpo[0] belongs to
// the artificial root and is n+1. Equals 1..n left to right iff the tree
// is projective in the usual sense.
std::vector<int> projective_order(const DepTree& tree);

// Deterministic gold derivation: replaying it from initial_config rebuilds
// exactly the tree's arcs. Internally runs the classic arc-standard
// swap oracle over the projective order and maps its head-final arc onto
// this system's moves (Swap, Shift, RightArc); Swap fires eagerly as soon
// as the top stack pair is out of projective order.
std::vector<Transition> static_oracle(const DepTree& tree);

// Replays a transition sequence and returns the resulting tree.
// Throws if a transition is illegal or the final state is not terminal.
DepTree replay(int n, const std::vector<Transition>& seq);

// One line per transition: kind, label, then stack/buffer contents.
std::string trace_line(const Transition& t, const Configuration& after);

}  // namespace nupar
