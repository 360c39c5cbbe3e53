#include "nupar/conllu.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace nupar {

std::string Sentence::sent_id() const {
  for (const auto& c : comments) {
    size_t pos = c.find("sent_id");
    if (pos != std::string::npos) {
      size_t eq = c.find('=', pos);
      if (eq != std::string::npos) {
        std::string id = c.substr(eq + 1);
        size_t a = id.find_first_not_of(" \t");
        if (a != std::string::npos) return id.substr(a);
      }
    }
  }
  return "";
}

DepTree DepTree::build(std::vector<int> heads, std::vector<std::string> labels) {
  DepTree t;
  t.heads = std::move(heads);
  t.labels = std::move(labels);
  if (t.heads.size() != t.labels.size())
    throw ContractViolation("DepTree: heads/labels length mismatch");
  t.children.assign(t.heads.size() + 1, {});
  for (size_t i = 0; i < t.heads.size(); ++i) {
    int h = t.heads[i];
    if (h >= 0 && h <= static_cast<int>(t.heads.size()))
      t.children[h].push_back(static_cast<int>(i) + 1);
  }
  return t;  // children lists are sorted by construction (ascending i)
}

DepTree DepTree::from_sentence(const Sentence& s) {
  std::vector<int> heads;
  std::vector<std::string> labels;
  heads.reserve(s.size());
  labels.reserve(s.size());
  for (const auto& tok : s.tokens) {
    if (tok.head < 0)
      throw DataError("sentence lacks gold head for token " + std::to_string(tok.id));
    heads.push_back(tok.head);
    labels.push_back(tok.deprel);
  }
  return build(std::move(heads), std::move(labels));
}

std::vector<std::string> validate_tree(const DepTree& tree) {
  std::vector<std::string> violations;
  const int n = static_cast<int>(tree.size());
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    int h = tree.heads[i];
    if (h < 0 || h > n) {
      violations.push_back("token " + std::to_string(i + 1) + " has head " +
                           std::to_string(h) + " out of range 0.." + std::to_string(n));
    } else if (h == i + 1) {
      violations.push_back("token " + std::to_string(i + 1) + " is its own head");
    }
    if (h == 0) ++roots;
  }
  if (roots == 0) violations.push_back("no root (no token with head 0)");
  if (roots > 1) violations.push_back(std::to_string(roots) + " roots (multiple head 0)");

  // Cycle check: walk up from every node; a walk longer than n hits a cycle.
  for (int i = 0; i < n; ++i) {
    int cur = i + 1;
    int steps = 0;
    while (cur != 0 && steps <= n) {
      int h = tree.heads[cur - 1];
      if (h < 0 || h > n || h == cur) break;
      cur = h;
      ++steps;
    }
    if (steps > n) {
      violations.push_back("cycle reachable from token " + std::to_string(i + 1));
      break;
    }
  }
  return violations;
}

namespace {

int parse_int_field(const std::string& s, size_t line_no, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + s + "'");
  }
}

void flush_sentence(Sentence& cur, std::vector<Sentence>& out, const ReadOptions& opts,
                    std::vector<std::string>* warnings, size_t& ordinal) {
  if (cur.tokens.empty() && cur.comments.empty() && cur.multiwords.empty()) return;
  ++ordinal;
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };
  std::string name = cur.sent_id();
  if (name.empty()) name = "sentence #" + std::to_string(ordinal);

  // ids must be exactly 1..n
  for (size_t i = 0; i < cur.tokens.size(); ++i) {
    if (cur.tokens[i].id != static_cast<int>(i) + 1)
      throw ParseError(name + ": token ids are not contiguous 1..n (saw " +
                       std::to_string(cur.tokens[i].id) + " at position " +
                       std::to_string(i + 1) + ")");
  }
  if (opts.require_gold_tree) {
    bool missing = false;
    for (const auto& t : cur.tokens)
      if (t.head < 0) missing = true;
    if (missing) {
      warn(name + ": dropped (missing HEAD in gold data)");
      cur = Sentence{};
      return;
    }
    auto violations = validate_tree(DepTree::from_sentence(cur));
    if (!violations.empty()) {
      warn(name + ": dropped (invalid tree: " + violations.front() + ")");
      cur = Sentence{};
      return;
    }
  }
  out.push_back(std::move(cur));
  cur = Sentence{};
}

}  // namespace

std::vector<Sentence> read_conllu(std::istream& in, ReadOptions opts,
                                  std::vector<std::string>* warnings) {
  std::vector<Sentence> out;
  Sentence cur;
  std::string line;
  size_t line_no = 0;
  size_t ordinal = 0;
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush_sentence(cur, out, opts, warnings, ordinal);
      continue;
    }
    if (line[0] == '#') {
      cur.comments.push_back(line);
      continue;
    }
    auto cols = split(line, '\t');
    if (cols.size() != 10)
      throw ParseError("line " + std::to_string(line_no) + ": expected 10 columns, got " +
                       std::to_string(cols.size()));
    const std::string& id = cols[0];
    if (id.find('-') != std::string::npos) {
      auto parts = split(id, '-');
      if (parts.size() != 2)
        throw ParseError("line " + std::to_string(line_no) + ": bad range id '" + id + "'");
      MultiwordRange r;
      r.start = parse_int_field(parts[0], line_no, "range start");
      r.end = parse_int_field(parts[1], line_no, "range end");
      r.form = cols[1];
      r.raw_line = line;
      cur.multiwords.push_back(std::move(r));
      continue;
    }
    if (id.find('.') != std::string::npos) {
      warn("line " + std::to_string(line_no) + ": empty node '" + id +
           "' skipped (basic-layer parsing only)");
      continue;
    }
    Token t;
    t.id = parse_int_field(id, line_no, "id");
    if (t.id < 1)
      throw ParseError("line " + std::to_string(line_no) + ": id must be >= 1");
    t.form = cols[1];
    t.lemma = cols[2];
    t.upos = cols[3];
    t.xpos = cols[4];
    t.feats = cols[5];
    t.head = cols[6] == "_" ? -1 : parse_int_field(cols[6], line_no, "head");
    t.deprel = cols[7];
    t.deps = cols[8];
    t.misc = cols[9];
    cur.tokens.push_back(std::move(t));
  }
  flush_sentence(cur, out, opts, warnings, ordinal);
  return out;
}

std::vector<Sentence> read_conllu_file(const std::string& path, ReadOptions opts,
                                       std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  return read_conllu(in, opts, warnings);
}

void write_conllu(const std::vector<Sentence>& sentences, std::ostream& out) {
  for (const auto& s : sentences) {
    for (const auto& c : s.comments) out << c << "\n";
    size_t mw = 0;
    for (const auto& t : s.tokens) {
      while (mw < s.multiwords.size() && s.multiwords[mw].start == t.id) {
        out << s.multiwords[mw].raw_line << "\n";
        ++mw;
      }
      out << t.id << '\t' << t.form << '\t' << t.lemma << '\t' << t.upos << '\t' << t.xpos
          << '\t' << t.feats << '\t';
      if (t.head < 0)
        out << '_';
      else
        out << t.head;
      out << '\t' << t.deprel << '\t' << t.deps << '\t' << t.misc << "\n";
    }
    out << "\n";
  }
}

std::string to_conllu(const std::vector<Sentence>& sentences) {
  std::ostringstream ss;
  write_conllu(sentences, ss);
  return ss.str();
}

}  // namespace nupar
