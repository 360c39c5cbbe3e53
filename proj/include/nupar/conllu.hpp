#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nupar/util.hpp"

namespace nupar {

// One word line of a CoNLL-U sentence. Multiword range lines and empty
// nodes are not Tokens; syntactic words are the parsing units.
struct Token {
  int id = 0;                 // 1-based position
  std::string form = "_";
  std::string lemma = "_";
  std::string upos = "_";
  std::string xpos = "_";
  std::string feats = "_";    // raw, unparsed
  int head = -1;              // 0 = artificial root, -1 = missing ("_")
  std::string deprel = "_";   // full string, subtype retained
  std::string deps = "_";
  std::string misc = "_";

  std::string universal() const { return std::string(universal_label(deprel)); }
};

// A multiword token line ("a-b"), inert metadata restored on write.
struct MultiwordRange {
  int start = 0;
  int end = 0;
  std::string form;
  std::string raw_line;  // full original line, written back verbatim
};

struct Sentence {
  std::vector<Token> tokens;
  std::vector<std::string> comments;        // without trailing newline
  std::vector<MultiwordRange> multiwords;   // sorted by start
  size_t size() const { return tokens.size(); }
  // First "# sent_id = ..." comment if present, for error messages.
  std::string sent_id() const;
};

// Head/label arrays plus derived child lists; shared by gold data and
// parser output. heads[i] is the head of token i+1 (0 = root).
struct DepTree {
  std::vector<int> heads;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> children;  // children[h] sorted, h in 0..n

  size_t size() const { return heads.size(); }
  static DepTree build(std::vector<int> heads, std::vector<std::string> labels);
  static DepTree from_sentence(const Sentence& s);
};

// Returns violation descriptions; empty iff acyclic, single-rooted and all
// heads in range. Violations are data, not exceptions.
std::vector<std::string> validate_tree(const DepTree& tree);

struct ReadOptions {
  // When true (training/eval inputs), sentences whose annotation is not a
  // valid single-rooted tree are dropped with a warning. When false
  // (inputs to be parsed), HEAD/DEPREL may be "_" and no tree is required.
  bool require_gold_tree = true;
};

std::vector<Sentence> read_conllu(std::istream& in, ReadOptions opts = {},
                                  std::vector<std::string>* warnings = nullptr);
std::vector<Sentence> read_conllu_file(const std::string& path, ReadOptions opts = {},
                                       std::vector<std::string>* warnings = nullptr);

void write_conllu(const std::vector<Sentence>& sentences, std::ostream& out);
std::string to_conllu(const std::vector<Sentence>& sentences);

}  // namespace nupar
