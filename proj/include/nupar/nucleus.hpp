#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nupar/conllu.hpp"

namespace nupar {

// The set F of relations that link a function word to its nucleus core.
// Matching is on the universal part of the label ("aux:pass" counts as aux).
struct FunctionalRelationSet {
  std::set<std::string> relations{"det", "case", "clf", "aux", "cop", "mark", "cc"};

  bool contains(std::string_view deprel) const {
    return relations.count(std::string(universal_label(deprel))) > 0;
  }
  static FunctionalRelationSet from_csv(const std::string& csv);
  std::string to_csv() const;
};

// A subtree whose internal dependencies are all functional relations.
struct Nucleus {
  int core = 0;              // the unique member whose incoming arc is not in F
  std::vector<int> members;  // sorted token ids, core included
  bool contiguous = true;    // members form an unbroken interval of positions

  bool dissociated() const { return members.size() > 1; }
};

// Partitions 1..n into nuclei. A token whose relation is in F joins its
// head's nucleus; chains of functional arcs collapse. A root token with a
// functional relation is promoted to a nucleus of its own.
std::vector<Nucleus> extract_nuclei(const DepTree& tree, const FunctionalRelationSet& f);

struct NucleusStats {
  long sentences = 0;
  long tokens = 0;
  std::map<std::string, long> relation_counts;  // per functional relation
  long nuclei = 0;
  long single_word = 0;
  long dissociated = 0;    // >= 2 members
  long discontiguous = 0;  // subset of dissociated
  std::map<size_t, long> size_histogram;
};

NucleusStats nucleus_statistics(const std::vector<Sentence>& treebank,
                                const FunctionalRelationSet& f);

// Rewrites each nucleus core's form to core_form + "-" + function word forms
// in decreasing token position ("room" + the(7) + from(6) -> "room-the-from").
// Heads and labels are untouched; function-word lines stay as they are.
Sentence oracle_transform(const Sentence& sentence, const FunctionalRelationSet& f);

std::vector<Sentence> oracle_transform_all(const std::vector<Sentence>& sentences,
                                           const FunctionalRelationSet& f);

}  // namespace nupar
