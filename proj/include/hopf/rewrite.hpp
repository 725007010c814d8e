#pragma once

#include "hopf/freealg.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hopf {

/// Raised when a relation cannot be oriented (its leading term is a nonzero
/// constant), i.e. the presented algebra is zero.
class InconsistentPresentation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graded degree-lexicographic order on words.
///
/// Words are compared by a sequence of additive weight vectors and then
/// lexicographically from the left, with generator index as precedence.
/// With a single all-ones vector this is plain deglex. Every generator must
/// have positive weight in at least one vector, which keeps the order
/// well-founded.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<std::vector<int>> weights);
  /// Plain degree-lexicographic order on `n` generators.
  static MonomialOrder deglex(std::size_t n);

  std::size_t generators() const { return weights_.empty() ? 0 : weights_.front().size(); }
  const std::vector<std::vector<int>>& weights() const { return weights_; }
  /// Value of the first weight vector, used as "degree" for truncation.
  int degree(const Word& w) const { return weight(w, 0); }
  int weight(const Word& w, std::size_t vector) const;

  std::strong_ordering compare(const Word& u, const Word& v) const;
  bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<std::vector<int>> weights_;
};

struct RewriteRule {
  Word lhs;
  NcPoly rhs;
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

enum class Strategy { leftmost, rightmost };

/// Ordered reduction rules over an alphabet; the presented algebra is the
/// free algebra modulo the ideal of lhs - rhs.
class RewriteSystem {
 public:
  RewriteSystem(Alphabet alphabet, MonomialOrder order, FieldSpec field,
                std::vector<RewriteRule> rules = {});

  const Alphabet& alphabet() const { return alphabet_; }
  const MonomialOrder& order() const { return order_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  /// Appends a rule after checking that rhs < lhs termwise.
  void add_rule(RewriteRule rule);
  /// Orients lhs - rhs (or a single polynomial) into a rule; the returned
  /// rule has leading coefficient normalized to one. Returns nullopt for 0.
  std::optional<RewriteRule> orient(const NcPoly& relation) const;
  /// Orients and appends; zero relations are ignored.
  void add_relation(const NcPoly& relation);

  /// True when no lhs contains another lhs and every rhs is irreducible.
  bool is_interreduced() const;
  /// Replaces the rule set by an equivalent inter-reduced one.
  void interreduce();

  bool is_irreducible(const Word& w) const;
  /// Largest term of `f` under the order; requires f != 0.
  Word leading_word(const NcPoly& f) const;

  friend bool operator==(const RewriteSystem&, const RewriteSystem&) = default;

 private:
  Alphabet alphabet_;
  MonomialOrder order_;
  FieldSpec field_;
  std::vector<RewriteRule> rules_;
};

/// Normal form: repeatedly rewrites the largest reducible monomial at the
/// leftmost (or rightmost) match until no lhs occurs as a subword.
NcPoly normal_form(const RewriteSystem& sys, const NcPoly& f, Strategy strategy = Strategy::leftmost);

/// Memoizing normal-form evaluator for confluent systems. Not thread-safe;
/// use one instance per thread.
class Reducer {
 public:
  explicit Reducer(const RewriteSystem& sys) : sys_(&sys) {}
  const RewriteSystem& system() const { return *sys_; }
  const NcPoly& reduce_word(const Word& w);
  NcPoly reduce(const NcPoly& f);
  NcPoly multiply(const NcPoly& f, const NcPoly& g) { return reduce(NcPoly::multiply(f, g)); }

 private:
  const RewriteSystem* sys_;
  std::unordered_map<std::string, NcPoly> cache_;
};

enum class AmbiguityKind { overlap, inclusion };

struct Ambiguity {
  AmbiguityKind kind;
  std::size_t first;   // rule applied at position 0 of the witness
  std::size_t second;  // rule applied at `offset`
  std::size_t offset;
  Word witness;
};

std::vector<Ambiguity> find_ambiguities(const RewriteSystem& sys);

struct ConfluenceFailure {
  Ambiguity ambiguity;
  NcPoly via_first;
  NcPoly via_second;
};

struct ConfluenceReport {
  std::size_t ambiguities = 0;
  std::size_t resolved = 0;
  std::vector<ConfluenceFailure> failures;
  bool confluent() const { return failures.empty(); }
};

ConfluenceReport check_confluence(const RewriteSystem& sys);

enum class CompletionStatus { complete, truncated };

struct CompletionResult {
  RewriteSystem system;
  CompletionStatus status;
  std::size_t rules_added = 0;
};

/// Knuth-Bendix style completion. Ambiguities whose witness degree exceeds
/// `max_degree` are checked but never turned into rules; if any of them
/// fails to resolve the result is marked truncated.
CompletionResult complete_system(const RewriteSystem& sys, int max_degree);

struct BasisEnumeration {
  std::vector<Word> words;           // irreducible words of weight <= bound, ascending order
  bool finite = false;               // whole set of irreducible words is finite
  std::optional<std::size_t> total;  // its size, when finite
};

/// Enumerates irreducible words with `weight` <= max_weight. Throws if
/// zero-weight letters admit unboundedly long irreducible words.
BasisEnumeration enumerate_basis(const RewriteSystem& sys, const std::vector<int>& weight, int max_weight);

/// True when the set of irreducible words is finite.
bool basis_is_finite(const RewriteSystem& sys);

int word_weight(const Word& w, const std::vector<int>& weight);

}  // namespace hopf
