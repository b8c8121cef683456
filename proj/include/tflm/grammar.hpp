#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace tflm {

/// One production. `rhs` entries are raw symbol names; `rhs_is_nonterminal`
/// marks which of them are nonterminals. `id` is the canonical rule text
/// ("lhs -> sym sym ..."), which doubles as the stable identifier in model
/// files.
struct ProductionRule {
  std::string id;
  std::string lhs;
  std::vector<std::string> rhs;
  std::vector<bool> rhs_is_nonterminal;

  int nonterminal_child_count() const {
    int n = 0;
    for (bool b : rhs_is_nonterminal) n += b ? 1 : 0;
    return n;
  }

  /// Symbols of the nonterminal children, in rhs order.
  std::vector<std::string> child_symbols() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < rhs.size(); ++i)
      if (rhs_is_nonterminal[i]) out.push_back(rhs[i]);
    return out;
  }
};

class Grammar {
 public:
  std::set<std::string> nonterminals;
  std::set<std::string> terminals;
  std::vector<ProductionRule> rules;
  std::string start_symbol;

  bool is_nonterminal(const std::string& s) const {
    return nonterminals.count(s) > 0;
  }

  /// Indices into `rules` for the rules with the given lhs, in file order.
  const std::vector<int>& rules_of(const std::string& lhs) const;

  const ProductionRule& rule(int index) const { return rules[index]; }

  int rule_index_by_id(const std::string& id) const;

  /// Position of rule `index` within rules_of(its lhs).
  int rule_ordinal(int index) const;

  /// Canonical single-string form, stable across loads; input to the
  /// fingerprint and useful for diffing.
  std::string canonical_text() const;

  /// FNV-1a 64 over canonical_text(), hex-encoded.
  std::string fingerprint() const;

  void rebuild_index();

 private:
  std::map<std::string, std::vector<int>> rules_by_lhs_;
  std::map<std::string, int> rule_by_id_;
};

/// Parses the toolkit's grammar-definition format: one rule per line,
/// `lhs -> sym sym ...`. Quoted symbols ('while', '{' ...) are literal
/// terminals; IDENT and EXPR are the built-in token classes; anything else
/// must appear as some rule's lhs. `#` starts a comment.
Grammar load_grammar(const std::string& definition_text);

/// The shipped MiniC grammar definition (same text as data/minic.grammar).
const std::string& builtin_minic_text();

/// Convenience: load_grammar(builtin_minic_text()).
Grammar builtin_minic_grammar();

}  // namespace tflm
