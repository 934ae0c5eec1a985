#include "workbench/rep_theory.hpp"

#include <algorithm>

#include "workbench/error.hpp"

namespace wb {

void WeightMultiset::add(const IntVec& w, Int mult) {
  if (mult == 0) return;
  entries_.emplace_back(w, mult);
  dirty_ = true;
}

void WeightMultiset::normalize() const {
  if (!dirty_) return;
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<IntVec, Int>> out;
  for (auto& e : entries_) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(e);
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  for (const auto& e : out)
    if (e.second < 0) throw Error("InternalError", "negative multiplicity in weight multiset");
  entries_ = std::move(out);
  dirty_ = false;
}

Int WeightMultiset::mult(const IntVec& w) const {
  normalize();
  auto it = std::lower_bound(entries_.begin(), entries_.end(), w,
                             [](const auto& e, const IntVec& k) { return e.first < k; });
  return (it != entries_.end() && it->first == w) ? it->second : 0;
}

Int WeightMultiset::total_mass() const {
  normalize();
  Int s = 0;
  for (const auto& e : entries_) s += e.second;
  return s;
}

IntVec WeightMultiset::max_weight(const RootDatum& d) const {
  normalize();
  if (entries_.empty()) throw Error("InternalError", "max_weight of empty multiset");
  const IntVec* best = nullptr;
  Int best_ht = 0;
  for (const auto& e : entries_) {
    Int ht = d.pair(e.first, d.two_rho_check);
    if (!best || ht > best_ht || (ht == best_ht && e.first > *best)) {
      best = &e.first;
      best_ht = ht;
    }
  }
  return *best;
}

void WeightMultiset::subtract(const WeightMultiset& other, Int mult) {
  normalize();
  other.normalize();
  // both sides sorted: one merge pass
  std::vector<std::pair<IntVec, Int>> out;
  out.reserve(entries_.size());
  size_t i = 0;
  for (const auto& [w, m] : other.entries_) {
    while (i < entries_.size() && entries_[i].first < w) out.push_back(std::move(entries_[i++]));
    if (i == entries_.size() || !(entries_[i].first == w))
      throw Error("InternalError", "negative multiplicity in weight multiset");
    Int rest = entries_[i].second - mult * m;
    if (rest < 0) throw Error("InternalError", "negative multiplicity in weight multiset");
    if (rest > 0) out.emplace_back(w, rest);
    ++i;
  }
  while (i < entries_.size()) out.push_back(std::move(entries_[i++]));
  entries_ = std::move(out);
}

namespace {

// lanes of 16 bits, highest lane = coordinate 0, bias 2^14 per lane
constexpr Int kPackBias = 1 << 14;
constexpr Int kPackLimit = 8000;

bool packable(const std::vector<std::pair<IntVec, Int>>& entries) {
  for (const auto& [w, m] : entries) {
    if (w.size() > 4) return false;
    for (Int x : w)
      if (x < -kPackLimit || x > kPackLimit) return false;
  }
  return true;
}

uint64_t pack_weight(const IntVec& w) {
  uint64_t key = 0;
  for (size_t i = 0; i < w.size(); ++i)
    key |= static_cast<uint64_t>(w[i] + kPackBias) << (16 * (3 - i));
  return key;
}

IntVec unpack_weight(uint64_t key, size_t rank, Int bias) {
  IntVec w(rank);
  for (size_t i = 0; i < rank; ++i)
    w[i] = static_cast<Int>((key >> (16 * (3 - i))) & 0xffff) - bias;
  return w;
}

}  // namespace

WeightMultiset WeightMultiset::convolve(const WeightMultiset& a, const WeightMultiset& b) {
  a.normalize();
  b.normalize();
  WeightMultiset out;
  if (a.entries_.empty() || b.entries_.empty()) return out;
  if (packable(a.entries_) && packable(b.entries_)) {
    // packed sums carry the doubled bias per lane and never overflow a lane
    std::vector<std::pair<uint64_t, Int>> sums;
    sums.reserve(a.entries_.size() * b.entries_.size());
    std::vector<std::pair<uint64_t, Int>> pb;
    pb.reserve(b.entries_.size());
    for (const auto& [w, m] : b.entries_) pb.emplace_back(pack_weight(w), m);
    for (const auto& [wa, ma] : a.entries_) {
      uint64_t ka = pack_weight(wa);
      for (const auto& [kb, mb] : pb) sums.emplace_back(ka + kb, ma * mb);
    }
    std::sort(sums.begin(), sums.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    size_t rank = a.entries_[0].first.size();
    out.entries_.reserve(sums.size() / 4 + 1);
    for (size_t i = 0; i < sums.size();) {
      uint64_t key = sums[i].first;
      Int m = 0;
      while (i < sums.size() && sums[i].first == key) m += sums[i++].second;
      if (m != 0) out.entries_.emplace_back(unpack_weight(key, rank, 2 * kPackBias), m);
    }
    return out;
  }
  out.entries_.reserve(a.entries_.size() * b.entries_.size());
  for (const auto& ea : a.entries_)
    for (const auto& eb : b.entries_) out.entries_.emplace_back(ea.first + eb.first, ea.second * eb.second);
  out.dirty_ = true;
  out.normalize();
  return out;
}

namespace {

void require_dominant(const RootDatum& d, const IntVec& lambda) {
  if (!d.is_dominant_weight(lambda)) throw Error("NotDominant", to_string(lambda) + " is not dominant");
}

}  // namespace

Int weyl_dim(const RootDatum& d, const IntVec& lambda) {
  require_dominant(d, lambda);
  // dim = prod <lambda+rho, av> / <rho, av>, run with 2rho to stay integral.
  Rat dim(1);
  IntVec two_lam_rho = lambda + lambda + d.two_rho;
  for (const auto& av : d.positive_coroots)
    dim *= Rat(d.pair(two_lam_rho, av), d.pair(d.two_rho, av));
  if (!is_integer(dim)) throw Error("InternalError", "non-integral Weyl dimension");
  return dim.numerator();
}

namespace {
WeightMultiset weight_multiplicities_uncached(const RootDatum& d, const IntVec& lambda);
}

const WeightMultiset& weight_multiplicities(const RootDatum& d, const IntVec& lambda) {
  thread_local std::map<std::string, std::map<IntVec, WeightMultiset>> memo;
  auto& per_datum = memo[d.cache_key()];
  auto it = per_datum.find(lambda);
  if (it == per_datum.end()) it = per_datum.emplace(lambda, weight_multiplicities_uncached(d, lambda)).first;
  return it->second;
}

namespace {

WeightMultiset weight_multiplicities_uncached(const RootDatum& d, const IntVec& lambda) {
  require_dominant(d, lambda);
  // Gram matrix of the W-invariant form: B(x,y) = x^T G y with
  // G = sum over positive coroots of (P cv)(P cv)^T.
  std::vector<IntVec> gram(d.rank, IntVec(d.rank, 0));
  for (const auto& cv : d.positive_coroots) {
    IntVec u(d.rank, 0);
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) u[i] += d.pairing_matrix(i, j) * cv[j];
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) gram[i][j] += u[i] * u[j];
  }
  auto bint = [&](const IntVec& x, const IntVec& y) {
    Int s = 0;
    for (int i = 0; i < d.rank; ++i) {
      if (x[i] == 0) continue;
      Int row = 0;
      for (int j = 0; j < d.rank; ++j) row += gram[i][j] * y[j];
      s += x[i] * row;
    }
    return s;
  };

  // Enumerate dominant mu <= lambda: mu = lambda - sum c_i alpha_i with
  // c >= 0 and sum c_i <= <lambda, 2rho_check>.
  Int height_cap = d.pair(lambda, d.two_rho_check);
  int m = d.ssrank();
  std::vector<IntVec> dominant_below;
  IntVec c(m, 0);
  Int lam_norm = bint(lambda, lambda);
  auto mu_of = [&](const IntVec& cc) {
    IntVec mu = lambda;
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < d.rank; ++k) mu[k] -= cc[i] * d.simple_roots[i][k];
    return mu;
  };
  while (true) {
    IntVec mu = mu_of(c);
    if (d.is_dominant_weight(mu) && bint(mu, mu) <= lam_norm) dominant_below.push_back(mu);
    int i = 0;
    for (; i < m; ++i) {
      ++c[i];
      Int total = 0;
      for (Int x : c) total += x;
      if (total <= height_cap) break;
      c[i] = 0;
    }
    if (i == m) break;
  }
  // sort dominant weights by decreasing height so dependencies are ready
  std::sort(dominant_below.begin(), dominant_below.end(), [&](const IntVec& a, const IntVec& b) {
    Int ha = d.pair(a, d.two_rho_check), hb = d.pair(b, d.two_rho_check);
    if (ha != hb) return ha > hb;
    return a > b;
  });

  // Freudenthal at scale 2: with X = 2(mu+rho), L = 2(lambda+rho),
  // (B(L,L) - B(X,X)) m_mu = 2 sum_{alpha>0} sum_k B(2(mu+k alpha), 2 alpha) m.
  std::map<IntVec, Int> dom_mult;
  IntVec two_lam_rho = lambda + lambda + d.two_rho;
  Int lam_rho_norm = bint(two_lam_rho, two_lam_rho);

  auto mult_of = [&](const IntVec& w) -> Int {
    auto it = dom_mult.find(dominant_rep_signed(d, w).vector);
    return it == dom_mult.end() ? 0 : it->second;
  };

  for (const auto& mu : dominant_below) {
    if (mu == lambda) {
      dom_mult[lambda] = 1;
      continue;
    }
    IntVec two_mu_rho = mu + mu + d.two_rho;
    Int denom = lam_rho_norm - bint(two_mu_rho, two_mu_rho);
    if (denom <= 0) continue;  // not a weight of V_lambda
    Int total = 0;
    for (size_t r = 0; r < d.positive_roots.size(); ++r) {
      const IntVec& alpha = d.positive_roots[r];
      IntVec two_alpha = alpha + alpha;
      IntVec w = mu;
      for (Int k = 1;; ++k) {
        w = w + alpha;
        Int mk = mult_of(w);
        if (mk == 0) {
          // weights of V_lambda along a root string have no internal gaps
          if (bint(w, w) > lam_norm) break;
          continue;
        }
        total += mk * bint(w + w, two_alpha);
      }
    }
    Int num = 2 * total;
    if (num % denom != 0) throw Error("InternalError", "Freudenthal produced a non-integer");
    Int val = num / denom;
    if (val != 0) dom_mult[mu] = val;
  }

  // expand over Weyl orbits
  WeightMultiset out;
  auto wgroup = weyl_group(d);
  std::map<IntVec, Int> full;
  for (const auto& [mu, mult] : dom_mult) {
    for (const auto& w : wgroup) {
      IntVec img = w.on_chars * mu;
      full.emplace(img, mult);
    }
  }
  for (const auto& [w, mult] : full) out.add(w, mult);
  return out;
}

}  // namespace

WeightMultiset restrict_to_torus(const RootDatum& d, const IntVec& lambda) {
  return weight_multiplicities(d, lambda);
}

std::map<IntVec, Int> tensor_decompose(const RootDatum& d, const IntVec& lambda, const IntVec& mu) {
  require_dominant(d, lambda);
  require_dominant(d, mu);
  const WeightMultiset& wt_mu = weight_multiplicities(d, mu);
  std::map<IntVec, Int> out;
  for (const auto& [nu, mult] : wt_mu.entries()) {
    // xi = lambda + nu + rho, handled as 2*xi for integrality
    IntVec two_xi = lambda + lambda + (nu + nu) + d.two_rho;
    auto rep = dominant_rep_signed(d, two_xi);
    bool singular = false;
    for (const auto& cv : d.simple_coroots)
      if (d.pair(rep.vector, cv) == 0) singular = true;
    if (singular) continue;
    IntVec two_res = rep.vector - d.two_rho;
    IntVec res(d.rank);
    for (int k = 0; k < d.rank; ++k) {
      if (two_res[k] % 2 != 0) throw Error("InternalError", "odd coordinate after rho shift");
      res[k] = two_res[k] / 2;
    }
    out[res] += rep.sign * mult;
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  for (const auto& [w, m] : out)
    if (m < 0) throw Error("InternalError", "negative multiplicity after Klimyk cancellation");
  return out;
}

RatVec levi_grading_cocharacter(const RootDatum& d, const std::vector<int>& levi) {
  for (int i : levi)
    if (i < 0 || i >= d.ssrank()) throw Error("BadLeviSubset", "simple root index out of range");
  std::vector<bool> in_levi(d.ssrank(), false);
  for (int i : levi) in_levi[i] = true;
  // z = sum of fundamental coweights of the simple roots outside the Levi,
  // taken inside the span of the simple coroots.
  RatVec target(d.ssrank(), Rat(0));
  for (int j = 0; j < d.ssrank(); ++j)
    if (!in_levi[j]) target[j] = 1;
  // solve <alpha_j, z> = target_j with z in span(coroots)
  // z = sum_k c_k alpha_k^vee:  sum_k c_k <alpha_j, alpha_k^vee> = target_j
  std::vector<IntVec> cartan_cols(d.ssrank(), IntVec(d.ssrank()));
  for (int k = 0; k < d.ssrank(); ++k)
    for (int j = 0; j < d.ssrank(); ++j) cartan_cols[k][j] = d.cartan(j, k);
  auto coeff = solve_in_span(cartan_cols, target);
  if (!coeff) throw Error("InternalError", "Cartan matrix singular");
  RatVec z(d.rank, Rat(0));
  for (int k = 0; k < d.ssrank(); ++k)
    for (int i = 0; i < d.rank; ++i) z[i] += (*coeff)[k] * Rat(d.simple_coroots[k][i]);
  return z;
}

LeviFiltration parabolic_filtration(const RootDatum& d, const IntVec& lambda,
                                    const std::vector<int>& levi) {
  require_dominant(d, lambda);
  RatVec z = levi_grading_cocharacter(d, levi);

  // Levi sub-datum: same lattices, simple roots restricted to the subset.
  std::vector<IntVec> lroots, lcoroots;
  for (int i : levi) {
    lroots.push_back(d.simple_roots[i]);
    lcoroots.push_back(d.simple_coroots[i]);
  }
  RootDatum dl = build_root_datum(d.rank, lroots, lcoroots, d.pairing_matrix,
                                  d.preset_name + "-levi", d.basis_names);

  const WeightMultiset& wt = weight_multiplicities(d, lambda);
  std::map<Rat, WeightMultiset> graded;
  for (const auto& [w, mult] : wt.entries()) graded[d.pair(to_rat(w), z)].add(w, mult);

  LeviFiltration out;
  out.levi_roots = levi;
  for (auto& [value, ms] : graded) {
    LeviFiltration::Level level;
    level.pairing_value = value;
    level.dim = ms.total_mass();
    // greedy peel into Levi irreducibles, highest (height, lex) weight first
    WeightMultiset rest = ms;
    while (!rest.empty()) {
      IntVec top = rest.max_weight(d);
      if (!dl.is_dominant_weight(top))
        throw Error("InternalError", "greedy top weight not Levi-dominant");
      Int mult = rest.mult(top);
      rest.subtract(weight_multiplicities(dl, top), mult);
      level.levi_irreps.emplace_back(top, mult);
    }
    out.levels.push_back(std::move(level));
  }
  return out;
}

}  // namespace wb
