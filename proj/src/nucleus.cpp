#include "nupar/nucleus.hpp"

#include <algorithm>

namespace nupar {

FunctionalRelationSet FunctionalRelationSet::from_csv(const std::string& csv) {
  FunctionalRelationSet f;
  f.relations.clear();
  for (auto& r : split(csv, ',')) {
    if (!r.empty()) f.relations.insert(r);
  }
  if (f.relations.empty()) throw DataError("functional relation set must be non-empty");
  return f;
}

std::string FunctionalRelationSet::to_csv() const {
  std::string out;
  for (const auto& r : relations) {
    if (!out.empty()) out += ',';
    out += r;
  }
  return out;
}

std::vector<Nucleus> extract_nuclei(const DepTree& tree, const FunctionalRelationSet& f) {
  const int n = static_cast<int>(tree.size());
  // Each token starts as its own group; a functional arc merges the
  // dependent into the head's group (root stays its own core even when its
  // label is functional — the promoted function word case).
  std::vector<int> parent(n + 1);
  for (int i = 0; i <= n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int i = 1; i <= n; ++i) {
    int h = tree.heads[i - 1];
    if (h >= 1 && f.contains(tree.labels[i - 1])) parent[find(i)] = find(h);
  }

  std::map<int, Nucleus> groups;  // keyed by representative
  for (int i = 1; i <= n; ++i) groups[find(i)].members.push_back(i);

  std::vector<Nucleus> out;
  out.reserve(groups.size());
  for (auto& [rep, nuc] : groups) {
    std::sort(nuc.members.begin(), nuc.members.end());
    nuc.contiguous =
        nuc.members.back() - nuc.members.front() + 1 == static_cast<int>(nuc.members.size());
    nuc.core = 0;
    for (int m : nuc.members) {
      int h = tree.heads[m - 1];
      if (h == 0 || !f.contains(tree.labels[m - 1])) {
        if (nuc.core != 0)
          throw ContractViolation("nucleus with two cores (tokens " +
                                  std::to_string(nuc.core) + " and " + std::to_string(m) + ")");
        nuc.core = m;
      }
    }
    if (nuc.core == 0)
      throw ContractViolation("nucleus without a core (functional cycle?)");
    out.push_back(std::move(nuc));
  }
  std::sort(out.begin(), out.end(),
            [](const Nucleus& a, const Nucleus& b) { return a.members.front() < b.members.front(); });
  return out;
}

NucleusStats nucleus_statistics(const std::vector<Sentence>& treebank,
                                const FunctionalRelationSet& f) {
  NucleusStats st;
  for (const auto& rel : f.relations) st.relation_counts[rel] = 0;
  for (const auto& s : treebank) {
    ++st.sentences;
    st.tokens += static_cast<long>(s.size());
    DepTree tree = DepTree::from_sentence(s);
    for (const auto& t : s.tokens) {
      std::string u = t.universal();
      if (f.relations.count(u)) ++st.relation_counts[u];
    }
    for (const auto& nuc : extract_nuclei(tree, f)) {
      ++st.nuclei;
      ++st.size_histogram[nuc.members.size()];
      if (!nuc.dissociated()) {
        ++st.single_word;
      } else {
        ++st.dissociated;
        if (!nuc.contiguous) ++st.discontiguous;
      }
    }
  }
  return st;
}

Sentence oracle_transform(const Sentence& sentence, const FunctionalRelationSet& f) {
  Sentence out = sentence;
  if (sentence.tokens.empty()) return out;
  DepTree tree = DepTree::from_sentence(sentence);
  for (const auto& nuc : extract_nuclei(tree, f)) {
    if (!nuc.dissociated()) continue;
    std::string& core_form = out.tokens[nuc.core - 1].form;
    // function words appended in decreasing token position
    for (auto it = nuc.members.rbegin(); it != nuc.members.rend(); ++it) {
      if (*it == nuc.core) continue;
      core_form += '-';
      core_form += sentence.tokens[*it - 1].form;
    }
  }
  return out;
}

std::vector<Sentence> oracle_transform_all(const std::vector<Sentence>& sentences,
                                           const FunctionalRelationSet& f) {
  std::vector<Sentence> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences) out.push_back(oracle_transform(s, f));
  return out;
}

}  // namespace nupar
