#include "hopf/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hopf {

MonomialOrder::MonomialOrder(std::vector<std::vector<int>> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("monomial order needs at least one weight vector");
  const std::size_t n = weights_.front().size();
  for (const auto& vec : weights_) {
    if (vec.size() != n) throw std::invalid_argument("weight vectors differ in length");
    for (int x : vec)
      if (x < 0) throw std::invalid_argument("weights must be nonnegative");
  }
  for (std::size_t g = 0; g < n; ++g) {
    bool positive = false;
    for (const auto& vec : weights_) positive = positive || vec[g] > 0;
    if (!positive) throw std::invalid_argument("generator " + std::to_string(g) + " has zero weight in every vector");
  }
}

MonomialOrder MonomialOrder::deglex(std::size_t n) { return MonomialOrder({std::vector<int>(n, 1)}); }

int MonomialOrder::weight(const Word& w, std::size_t vector) const {
  const auto& vec = weights_[vector];
  int total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) total += vec[w[i]];
  return total;
}

std::strong_ordering MonomialOrder::compare(const Word& u, const Word& v) const {
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    const int wu = weight(u, k);
    const int wv = weight(v, k);
    if (wu != wv) return wu <=> wv;
  }
  // Equal weights and a proper prefix cannot occur together, so plain
  // lexicographic comparison is multiplicative here.
  return u.raw() <=> v.raw();
}

int word_weight(const Word& w, const std::vector<int>& weight) {
  int total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) total += weight.at(w[i]);
  return total;
}

// ---------------------------------------------------------------------------

RewriteSystem::RewriteSystem(Alphabet alphabet, MonomialOrder order, FieldSpec field,
                             std::vector<RewriteRule> rules)
    : alphabet_(std::move(alphabet)), order_(std::move(order)), field_(field) {
  if (order_.generators() != alphabet_.size())
    throw std::invalid_argument("monomial order and alphabet sizes differ");
  for (auto& r : rules) add_rule(std::move(r));
}

void RewriteSystem::add_rule(RewriteRule rule) {
  for (const auto& [w, c] : rule.rhs.terms())
    if (!order_.less(w, rule.lhs))
      throw std::invalid_argument("rule " + alphabet_.format(rule.lhs) + " -> " + rule.rhs.format(alphabet_) +
                                  " is not decreasing");
  rules_.push_back(std::move(rule));
}

Word RewriteSystem::leading_word(const NcPoly& f) const {
  if (f.is_zero()) throw std::invalid_argument("leading word of zero");
  const Word* best = nullptr;
  for (const auto& [w, c] : f.terms())
    if (!best || order_.less(*best, w)) best = &w;
  return *best;
}

std::optional<RewriteRule> RewriteSystem::orient(const NcPoly& relation) const {
  if (relation.is_zero()) return std::nullopt;
  const Word lead = leading_word(relation);
  if (lead.empty())
    throw InconsistentPresentation("relation " + relation.format(alphabet_) + " has a constant leading term");
  const FieldElement c = relation.coefficient(lead, field_);
  NcPoly rhs = relation;
  rhs.add_term(lead, -c);
  return RewriteRule{lead, (-c.inverse()) * rhs};
}

void RewriteSystem::add_relation(const NcPoly& relation) {
  if (auto rule = orient(relation)) add_rule(std::move(*rule));
}

bool RewriteSystem::is_irreducible(const Word& w) const {
  return std::none_of(rules_.begin(), rules_.end(), [&](const RewriteRule& r) { return w.contains(r.lhs); });
}

bool RewriteSystem::is_interreduced() const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    for (std::size_t j = 0; j < rules_.size(); ++j)
      if (i != j && rules_[i].lhs.contains(rules_[j].lhs)) return false;
    for (const auto& [w, c] : rules_[i].rhs.terms())
      if (!is_irreducible(w)) return false;
  }
  return true;
}

void RewriteSystem::interreduce() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules_.size() && !changed; ++i) {
      for (std::size_t j = 0; j < rules_.size(); ++j) {
        if (i == j || !rules_[i].lhs.contains(rules_[j].lhs)) continue;
        RewriteRule removed = std::move(rules_[i]);
        rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(i));
        NcPoly relation = NcPoly::monomial(removed.lhs, FieldElement::one(field_)) - removed.rhs;
        add_relation(normal_form(*this, relation));
        changed = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < rules_.size(); ++i) rules_[i].rhs = normal_form(*this, rules_[i].rhs);
}

// ---------------------------------------------------------------------------

namespace {

struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Word& u, const Word& v) const { return order->less(u, v); }
};

// Position and index of the chosen match in `w`, or npos.
std::pair<std::size_t, std::size_t> find_match(const RewriteSystem& sys, const Word& w, Strategy strategy) {
  std::size_t best_pos = Word::npos;
  std::size_t best_rule = 0;
  const auto& rules = sys.rules();
  for (std::size_t k = 0; k < rules.size(); ++k) {
    if (strategy == Strategy::leftmost) {
      const std::size_t pos = w.find(rules[k].lhs);
      if (pos != Word::npos && (best_pos == Word::npos || pos < best_pos)) {
        best_pos = pos;
        best_rule = k;
      }
    } else {
      if (rules[k].lhs.size() > w.size()) continue;
      const std::size_t pos = w.rfind(rules[k].lhs);
      if (pos != Word::npos && (best_pos == Word::npos || pos + rules[k].lhs.size() > best_pos + rules[best_rule].lhs.size())) {
        best_pos = pos;
        best_rule = k;
      }
    }
  }
  return {best_pos, best_rule};
}

NcPoly apply_at(const RewriteRule& rule, const Word& w, std::size_t pos) {
  const Word prefix = w.substr(0, pos);
  const Word suffix = w.substr(pos + rule.lhs.size());
  NcPoly out;
  for (const auto& [m, c] : rule.rhs.terms()) out.add_term(prefix * m * suffix, c);
  return out;
}

}  // namespace

NcPoly normal_form(const RewriteSystem& sys, const NcPoly& f, Strategy strategy) {
  std::map<Word, FieldElement, OrderLess> work(OrderLess{&sys.order()});
  for (const auto& [w, c] : f.terms()) work.emplace(w, c);
  NcPoly result;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    FieldElement c = it->second;
    work.erase(it);
    const auto [pos, k] = find_match(sys, w, strategy);
    if (pos == Word::npos) {
      result.add_term(w, c);
      continue;
    }
    const NcPoly step = apply_at(sys.rules()[k], w, pos);
    for (const auto& [m, d] : step.terms()) {
      const FieldElement cd = c * d;
      auto [slot, inserted] = work.try_emplace(m, cd);
      if (!inserted) {
        slot->second += cd;
        if (slot->second.is_zero()) work.erase(slot);
      }
    }
  }
  return result;
}

const NcPoly& Reducer::reduce_word(const Word& w) {
  if (auto it = cache_.find(w.raw()); it != cache_.end()) return it->second;
  const auto [pos, k] = find_match(*sys_, w, Strategy::leftmost);
  NcPoly value;
  if (pos == Word::npos) {
    value = NcPoly::monomial(w, FieldElement::one(sys_->field()));
  } else {
    const NcPoly step = apply_at(sys_->rules()[k], w, pos);
    for (const auto& [m, c] : step.terms()) value += c * reduce_word(m);
  }
  return cache_.emplace(w.raw(), std::move(value)).first->second;
}

NcPoly Reducer::reduce(const NcPoly& f) {
  NcPoly out;
  for (const auto& [w, c] : f.terms()) out += c * reduce_word(w);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Ambiguity> find_ambiguities(const RewriteSystem& sys) {
  std::vector<Ambiguity> out;
  const auto& rules = sys.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& u = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& v = rules[j].lhs;
      // Overlaps: a proper suffix of u equals a proper prefix of v.
      for (std::size_t k = 1; k < u.size() && k < v.size(); ++k) {
        if (u.substr(u.size() - k) == v.substr(0, k))
          out.push_back({AmbiguityKind::overlap, i, j, u.size() - k, u * v.substr(k)});
      }
      // Inclusions: v occurs inside u. Identical left-hand sides are listed once.
      if (i == j || v.size() > u.size()) continue;
      if (u == v && j < i) continue;
      for (std::size_t pos = u.find(v); pos != Word::npos; pos = u.find(v, pos + 1))
        out.push_back({AmbiguityKind::inclusion, i, j, pos, u});
    }
  }
  return out;
}

namespace {

std::pair<NcPoly, NcPoly> resolve_sides(const RewriteSystem& sys, const Ambiguity& amb) {
  return {apply_at(sys.rules()[amb.first], amb.witness, 0),
          apply_at(sys.rules()[amb.second], amb.witness, amb.offset)};
}

}  // namespace

ConfluenceReport check_confluence(const RewriteSystem& sys) {
  ConfluenceReport report;
  const auto ambiguities = find_ambiguities(sys);
  report.ambiguities = ambiguities.size();
  for (const auto& amb : ambiguities) {
    auto [left, right] = resolve_sides(sys, amb);
    NcPoly nf_left = normal_form(sys, left);
    NcPoly nf_right = normal_form(sys, right);
    if (nf_left == nf_right) {
      ++report.resolved;
    } else {
      report.failures.push_back({amb, std::move(nf_left), std::move(nf_right)});
    }
  }
  return report;
}

CompletionResult complete_system(const RewriteSystem& sys, int max_degree) {
  for (const auto& rule : sys.rules())
    if (sys.order().degree(rule.lhs) > max_degree)
      throw std::invalid_argument("max_degree is below the degree of an existing rule");

  constexpr std::size_t kMaxRules = 4000;
  RewriteSystem current = sys;
  current.interreduce();
  std::size_t added = 0;
  while (true) {
    auto ambiguities = find_ambiguities(current);
    std::stable_sort(ambiguities.begin(), ambiguities.end(), [&](const Ambiguity& x, const Ambiguity& y) {
      return current.order().less(x.witness, y.witness);
    });
    RewriteSystem next = current;
    bool grew = false;
    bool truncated = false;
    for (const auto& amb : ambiguities) {
      auto [left, right] = resolve_sides(current, amb);
      NcPoly diff = normal_form(next, left - right);
      if (diff.is_zero()) continue;
      if (current.order().degree(amb.witness) > max_degree) {
        truncated = true;
        continue;
      }
      next.add_relation(diff);
      ++added;
      grew = true;
      if (next.rules().size() > kMaxRules) throw std::runtime_error("completion exceeded the rule limit");
    }
    if (!grew) {
      return {std::move(current), truncated ? CompletionStatus::truncated : CompletionStatus::complete, added};
    }
    next.interreduce();
    current = std::move(next);
  }
}

// ---------------------------------------------------------------------------

namespace {

bool suffix_reducible(const RewriteSystem& sys, const Word& w) {
  for (const auto& r : sys.rules()) {
    const std::size_t n = r.lhs.size();
    if (n <= w.size() && w.substr(w.size() - n) == r.lhs) return true;
  }
  return false;
}

constexpr std::size_t kMaxBasisWordLength = 512;

}  // namespace

BasisEnumeration enumerate_basis(const RewriteSystem& sys, const std::vector<int>& weight, int max_weight) {
  if (weight.size() != sys.alphabet().size()) throw std::invalid_argument("weight map size mismatch");
  BasisEnumeration out;
  std::vector<Word> stack{Word{}};
  while (!stack.empty()) {
    Word w = std::move(stack.back());
    stack.pop_back();
    if (w.size() > kMaxBasisWordLength)
      throw std::runtime_error("irreducible words of bounded weight are unbounded in length");
    const int wt = word_weight(w, weight);
    for (std::size_t g = 0; g < sys.alphabet().size(); ++g) {
      if (wt + weight[g] > max_weight) continue;
      Word next = w * Word::letter(static_cast<Letter>(g));
      if (!suffix_reducible(sys, next)) stack.push_back(std::move(next));
    }
    out.words.push_back(std::move(w));
  }
  std::sort(out.words.begin(), out.words.end(),
            [&](const Word& x, const Word& y) { return sys.order().less(x, y); });
  out.finite = basis_is_finite(sys);
  if (out.finite) {
    std::size_t count = 0;
    std::vector<Word> all{Word{}};
    while (!all.empty()) {
      Word w = std::move(all.back());
      all.pop_back();
      ++count;
      for (std::size_t g = 0; g < sys.alphabet().size(); ++g) {
        Word next = w * Word::letter(static_cast<Letter>(g));
        if (!suffix_reducible(sys, next)) all.push_back(std::move(next));
      }
    }
    out.total = count;
  }
  return out;
}

bool basis_is_finite(const RewriteSystem& sys) {
  std::size_t max_len = 1;
  for (const auto& r : sys.rules()) max_len = std::max(max_len, r.lhs.size());
  const std::size_t state_len = max_len - 1;
  const std::size_t n = sys.alphabet().size();

  // States: irreducible words of length state_len. Any irreducible word of
  // greater length walks a path in this graph, so finiteness <=> acyclic.
  std::vector<Word> states{Word{}};
  for (std::size_t len = 0; len < state_len; ++len) {
    std::vector<Word> grown;
    for (const auto& w : states)
      for (std::size_t g = 0; g < n; ++g) {
        Word next = w * Word::letter(static_cast<Letter>(g));
        if (!suffix_reducible(sys, next)) grown.push_back(std::move(next));
      }
    states = std::move(grown);
  }
  std::map<Word, int> color;  // 0 unvisited, 1 on stack, 2 done
  std::function<bool(const Word&)> has_cycle = [&](const Word& s) {
    color[s] = 1;
    for (std::size_t g = 0; g < n; ++g) {
      Word next = s * Word::letter(static_cast<Letter>(g));
      if (suffix_reducible(sys, next)) continue;
      Word target = next.substr(1);
      if (state_len == 0) target = Word{};
      const int c = color[target];
      if (c == 1) return true;
      if (c == 0 && has_cycle(target)) return true;
    }
    color[s] = 2;
    return false;
  };
  for (const auto& s : states)
    if (color[s] == 0 && has_cycle(s)) return false;
  return true;
}

}  // namespace hopf
