#include "qm/posets.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>

namespace qm {

namespace {

constexpr std::size_t kMaskBits = 64;

bool contains(Subset s, std::size_t i) { return ((s >> i) & 1U) != 0; }
Subset singleton(std::size_t i) { return Subset{1} << i; }
Subset full_mask(std::size_t n) { return n >= kMaskBits ? ~Subset{0} : (Subset{1} << n) - 1; }

template <typename F>
void for_each_member(Subset s, F&& f) {
  while (s != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(s));
    f(i);
    s &= s - 1;
  }
}

void require_mask_size(std::size_t n, const char* what) {
  if (n > kMaskBits) throw TooLarge(std::string(what) + ": more than 64 elements");
}

void check_names(const std::vector<std::string>& names, std::size_t n) {
  if (names.size() != n) throw NotAPoset("element count does not match relation size");
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) throw NotAPoset("duplicate element name '" + name + "'");
  }
}

}  // namespace

Relation::Relation(std::size_t n, const std::vector<std::vector<bool>>& rows) : Relation(n) {
  if (rows.size() != n) throw std::invalid_argument("relation must have one row per element");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("relation row has wrong length");
    for (std::size_t j = 0; j < n; ++j) set(i, j, rows[i][j]);
  }
}

Subset Relation::row(std::size_t i) const {
  require_mask_size(n_, "bitmask row");
  Subset s = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    if ((*this)(i, j)) s |= singleton(j);
  }
  return s;
}

Subset Relation::column(std::size_t j) const {
  require_mask_size(n_, "bitmask column");
  Subset s = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, j)) s |= singleton(i);
  }
  return s;
}

std::optional<std::string> partial_order_violation(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!r(i, i)) return "not reflexive at element " + std::to_string(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (r(i, j) && r(j, i)) {
        return "not antisymmetric at elements " + std::to_string(i) + ", " + std::to_string(j);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!r(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (r(j, k) && !r(i, k)) {
          return "not transitive at elements " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                 std::to_string(k);
        }
      }
    }
  }
  return std::nullopt;
}

FinitePoset::FinitePoset(std::vector<std::string> names, Relation leq)
    : names_(std::move(names)), leq_(std::move(leq)) {
  check_names(names_, leq_.size());
  if (auto v = partial_order_violation(leq_)) throw NotAPoset(*v);
}

FinitePoset::FinitePoset(std::vector<std::string> names, const std::vector<std::vector<bool>>& leq)
    : FinitePoset(names, Relation(names.size(), leq)) {}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> names;
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    for (std::size_t j = i; j < n; ++j) r.set(i, j);
  }
  return {std::move(names), std::move(r)};
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<std::string> names;
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("a" + std::to_string(i));
    r.set(i, i);
  }
  return {std::move(names), std::move(r)};
}

FinitePoset FinitePoset::powerset(std::size_t n) {
  require_mask_size(n, "powerset");
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::string> base;
  for (std::size_t i = 0; i < n; ++i) base.push_back("e" + std::to_string(i));
  std::vector<std::string> names;
  Relation r(m);
  for (std::size_t s = 0; s < m; ++s) {
    names.push_back(subset_name(base, s));
    for (std::size_t t = 0; t < m; ++t) {
      if ((s & t) == s) r.set(s, t);
    }
  }
  return {std::move(names), std::move(r)};
}

std::size_t FinitePoset::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw UnknownElement("unknown element '" + std::string(name) + "'");
}

bool FinitePoset::is_up_set(Subset s) const {
  bool ok = true;
  for_each_member(s, [&](std::size_t i) { ok = ok && (up(i) & ~s) == 0; });
  return ok;
}

bool FinitePoset::is_down_set(Subset s) const {
  bool ok = true;
  for_each_member(s, [&](std::size_t i) { ok = ok && (down(i) & ~s) == 0; });
  return ok;
}

bool FinitePoset::is_directed(Subset s) const {
  if (s == 0) return false;
  bool ok = true;
  for_each_member(s, [&](std::size_t i) {
    for_each_member(s, [&](std::size_t j) { ok = ok && (up(i) & up(j) & s) != 0; });
  });
  return ok;
}

std::optional<std::size_t> FinitePoset::supremum(Subset s) const {
  Subset bounds = full_mask(size());
  for_each_member(s, [&](std::size_t i) { bounds &= up(i); });
  std::optional<std::size_t> least;
  for_each_member(bounds, [&](std::size_t u) {
    if (!least && (bounds & ~up(u)) == 0) least = u;
  });
  return least;
}

AbstractBasis::AbstractBasis(std::vector<std::string> names, Relation prec)
    : names_(std::move(names)), prec_(std::move(prec)) {
  validate_abstract_basis(names_, prec_);
}

AbstractBasis::AbstractBasis(std::vector<std::string> names, const std::vector<std::vector<bool>>& prec)
    : AbstractBasis(names, Relation(names.size(), prec)) {}

void validate_abstract_basis(const std::vector<std::string>& names, const Relation& prec) {
  const std::size_t n = prec.size();
  if (names.size() != n) throw std::invalid_argument("element count does not match relation size");
  require_mask_size(n, "abstract basis");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!prec(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (prec(b, c) && !prec(a, c)) {
          throw NotAnAbstractBasis("not transitive: " + names[a] + " < " + names[b] + " < " + names[c], {a, b},
                                   c);
        }
      }
    }
  }
  // The predecessor set of y is the largest F with F < y, so it is the
  // only instance that has to be tried.
  for (std::size_t y = 0; y < n; ++y) {
    const Subset pred = prec.column(y);
    if (pred == 0) continue;
    bool found = false;
    for_each_member(pred, [&](std::size_t z) { found = found || (pred & ~prec.column(z)) == 0; });
    if (!found) {
      std::vector<std::size_t> lower;
      for_each_member(pred, [&](std::size_t i) { lower.push_back(i); });
      throw NotAnAbstractBasis("not interpolative below " + names[y] + ": no z with " +
                                   subset_name(names, pred) + " < z < " + names[y],
                               std::move(lower), y);
    }
  }
}

bool way_below_by_definition(const FinitePoset& p, std::size_t a, std::size_t b) {
  if (p.size() > 16) throw TooLarge("way_below_by_definition: more than 16 elements");
  const Subset all = full_mask(p.size());
  for (Subset d = 1; d <= all && d != 0; ++d) {
    if (!p.is_directed(d)) continue;
    const auto sup = p.supremum(d);
    if (!sup || !p.leq(b, *sup)) continue;
    if ((d & p.up(a)) == 0) return false;
    if (d == all) break;
  }
  return true;
}

bool way_below_finite(const FinitePoset& p, std::size_t a, std::size_t b) {
  if (a >= p.size() || b >= p.size()) throw UnknownElement("way_below_finite: element index out of range");
  const bool result = p.leq(a, b);
  if (p.size() <= 8 && way_below_by_definition(p, a, b) != result) {
    throw std::logic_error("way-below on a finite poset disagrees with its definition");
  }
  return result;
}

namespace {

FinitePoset inclusion_poset(const std::vector<std::string>& base, const std::vector<Subset>& sets) {
  std::vector<std::string> names;
  Relation r(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    names.push_back(subset_name(base, sets[i]));
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if ((sets[i] & ~sets[j]) == 0) r.set(i, j);
    }
  }
  return {std::move(names), std::move(r)};
}

std::optional<std::size_t> position(const std::vector<Subset>& sets, Subset s) {
  auto it = std::find(sets.begin(), sets.end(), s);
  if (it == sets.end()) return std::nullopt;
  return static_cast<std::size_t>(it - sets.begin());
}

}  // namespace

Completion ideal_completion(const FinitePoset& p, std::size_t bound) {
  if (p.size() > bound) throw TooLarge("ideal_completion: poset exceeds bound " + std::to_string(bound));
  require_mask_size(p.size(), "ideal_completion");
  std::vector<Subset> ideals;
  const Subset all = full_mask(p.size());
  for (Subset s = 1; s <= all && p.size() > 0; ++s) {
    if (p.is_down_set(s) && p.is_directed(s)) ideals.push_back(s);
    if (s == all) break;
  }
  Completion c{inclusion_poset(p.names(), ideals), ideals, {}};
  for (std::size_t b = 0; b < p.size(); ++b) c.embedding.push_back(position(ideals, p.down(b)));
  return c;
}

Completion rounded_ideal_completion(const AbstractBasis& basis, std::size_t bound) {
  const std::size_t n = basis.size();
  if (n > bound) throw TooLarge("rounded_ideal_completion: basis exceeds bound " + std::to_string(bound));
  std::vector<Subset> ideals;
  const Subset all = full_mask(n);
  for (Subset d = 1; d <= all && n > 0; ++d) {
    bool down_closed = true;
    for_each_member(d, [&](std::size_t y) { down_closed = down_closed && (basis.predecessors(y) & ~d) == 0; });
    if (down_closed) {
      // Every nonempty finite F inside d needs an upper bound z in d.
      bool directed = true;
      for (Subset f = d; f != 0 && directed; f = (f - 1) & d) {
        bool bounded = false;
        for_each_member(d, [&](std::size_t z) { bounded = bounded || (f & ~basis.predecessors(z)) == 0; });
        directed = bounded;
      }
      if (directed) ideals.push_back(d);
    }
    if (d == all) break;
  }
  Completion c{inclusion_poset(basis.names(), ideals), ideals, {}};
  for (std::size_t b = 0; b < n; ++b) c.embedding.push_back(position(ideals, basis.predecessors(b)));
  return c;
}

std::vector<Subset> rounded_ideals_from_generators(const AbstractBasis& basis) {
  std::vector<Subset> out;
  for (std::size_t z = 0; z < basis.size(); ++z) {
    if (basis.prec(z, z)) out.push_back(basis.predecessors(z));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QuasiIdealReport quasi_ideal_check(const Relation& leq, const std::vector<bool>& finite_elems) {
  if (finite_elems.size() != leq.size()) throw std::invalid_argument("finite element flags have wrong length");
  QuasiIdealReport report;
  for (std::size_t f = 0; f < leq.size(); ++f) {
    if (!finite_elems[f]) continue;
    for (std::size_t e = 0; e < leq.size(); ++e) {
      if (leq(e, f) && !finite_elems[e]) report.violations.push_back({e, f});
    }
  }
  return report;
}

QuasiIdealReport quasi_ideal_check(const FinitePoset& p, const std::vector<bool>& finite_elems) {
  return quasi_ideal_check(p.relation(), finite_elems);
}

std::size_t alpha_response(const FinitePoset& p, const BetaMove& move) {
  const Subset candidates = move.open & p.down(move.point);
  std::optional<std::size_t> choice;
  for_each_member(candidates, [&](std::size_t c) {
    if (!choice && (candidates & p.down(c)) == singleton(c)) choice = c;
  });
  if (!choice) throw IllegalMove("beta's point is not inside beta's open set");
  return *choice;
}

namespace {

void validate_move(const FinitePoset& p, const BetaMove& move, std::optional<Subset> previous_u) {
  if (move.point >= p.size()) throw IllegalMove("beta's point is not an element");
  if ((move.open & ~full_mask(p.size())) != 0 || !p.is_up_set(move.open)) {
    throw IllegalMove("beta's set is not Scott-open");
  }
  if (!contains(move.open, move.point)) throw IllegalMove("beta's point is not inside beta's open set");
  if (previous_u && (move.open & ~*previous_u) != 0) {
    throw IllegalMove("beta's open set is not inside alpha's previous move");
  }
}

ChoquetRound respond(const FinitePoset& p, const BetaMove& move) {
  const std::size_t y = alpha_response(p, move);
  return {move, y, p.up(y)};
}

void finish(const FinitePoset& p, PlayTranscript& t) {
  // Continue with beta's stationary strategy until the position repeats.
  const std::size_t played = t.rounds.size();
  while (t.rounds.size() < played + p.size() + 2) {
    const ChoquetRound& last = t.rounds.back();
    const BetaMove next{last.beta.point, last.alpha_open};
    t.rounds.push_back(respond(p, next));
    if (next == last.beta) break;
  }
  t.stationary_rounds = t.rounds.size() - played;
  t.intersection_u = full_mask(p.size());
  t.intersection_v = full_mask(p.size());
  for (const auto& r : t.rounds) {
    t.intersection_u &= r.alpha_open;
    t.intersection_v &= r.beta.open;
  }
  t.alpha_wins = t.intersection_u != 0;
  t.limit_point.reset();
  for (std::size_t y = 0; y < p.size(); ++y) {
    if (p.up(y) == t.intersection_v) {
      t.limit_point = y;
      break;
    }
  }
}

void tally(ChoquetSummary& s, const PlayTranscript& t) {
  ++s.plays;
  const bool win = t.alpha_wins;
  const bool equal = t.intersection_u == t.intersection_v;
  const bool converged = t.limit_point.has_value();
  s.alpha_wins += win ? 1 : 0;
  s.intersections_equal += equal ? 1 : 0;
  s.converged += converged ? 1 : 0;
  if (!(win && equal && converged) && !s.first_failure) s.first_failure = t;
}

}  // namespace

PlayTranscript choquet_play(const FinitePoset& p, std::span<const BetaMove> beta_moves) {
  if (p.empty()) throw IllegalMove("the game needs a nonempty poset");
  if (beta_moves.empty()) throw IllegalMove("a play needs at least one move");
  require_mask_size(p.size(), "choquet_play");
  PlayTranscript t;
  std::optional<Subset> previous_u;
  for (const auto& move : beta_moves) {
    validate_move(p, move, previous_u);
    t.rounds.push_back(respond(p, move));
    previous_u = t.rounds.back().alpha_open;
  }
  finish(p, t);
  return t;
}

std::vector<BetaMove> legal_beta_moves(const FinitePoset& p, const std::vector<ChoquetRound>& history) {
  const Subset within = history.empty() ? full_mask(p.size()) : history.back().alpha_open;
  std::vector<Subset> opens;
  for (Subset v = within; v != 0; v = (v - 1) & within) {
    if (p.is_up_set(v)) opens.push_back(v);
  }
  std::sort(opens.begin(), opens.end());
  std::vector<BetaMove> moves;
  for (Subset v : opens) {
    for_each_member(v, [&](std::size_t x) { moves.push_back({x, v}); });
  }
  return moves;
}

ChoquetSummary choquet_exhaustive(const FinitePoset& p, std::size_t depth) {
  if (p.empty() || depth == 0) throw IllegalMove("the game needs a nonempty poset and depth >= 1");
  require_mask_size(p.size(), "choquet_exhaustive");
  ChoquetSummary summary;
  PlayTranscript current;
  auto recurse = [&](auto&& self) -> void {
    if (current.rounds.size() == depth) {
      PlayTranscript t = current;
      finish(p, t);
      tally(summary, t);
      return;
    }
    for (const auto& move : legal_beta_moves(p, current.rounds)) {
      current.rounds.push_back(respond(p, move));
      self(self);
      current.rounds.pop_back();
    }
  };
  recurse(recurse);
  return summary;
}

ChoquetSummary choquet_random(const FinitePoset& p, std::size_t depth, std::size_t plays, std::uint64_t seed) {
  if (p.empty() || depth == 0) throw IllegalMove("the game needs a nonempty poset and depth >= 1");
  std::mt19937_64 rng(seed);
  ChoquetSummary summary;
  for (std::size_t k = 0; k < plays; ++k) {
    std::vector<BetaMove> moves;
    std::vector<ChoquetRound> history;
    for (std::size_t n = 0; n < depth; ++n) {
      const auto legal = legal_beta_moves(p, history);
      std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
      moves.push_back(legal[pick(rng)]);
      history.push_back(respond(p, moves.back()));
    }
    tally(summary, choquet_play(p, moves));
  }
  return summary;
}

std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const FinitePoset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) {
        if (c != a && c != b && p.leq(a, c) && p.leq(c, b)) covered = false;
      }
      if (covered) out.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string export_dot(const FinitePoset& p, const DotStyle& style) {
  if (p.empty()) return "digraph { }\n";
  std::ostringstream out;
  out << "digraph {\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "  n" << i << " [label=" << dot_quote(p.name(i));
    if (i < style.node_attributes.size() && !style.node_attributes[i].empty()) {
      out << ", " << style.node_attributes[i];
    }
    out << "];\n";
  }
  for (const auto& [a, b] : covering_pairs(p)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string subset_name(const std::vector<std::string>& names, Subset s) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](std::size_t i) {
    if (!first) out += ",";
    out += i < names.size() ? names[i] : std::to_string(i);
    first = false;
  });
  return out + "}";
}

}  // namespace qm
