#include "workbench/stalk_engine.hpp"

#include <algorithm>

#include "workbench/error.hpp"

namespace wb {

std::string StalkLabel::display() const {
  if (delta_twist) {
    if (rep.kind == RepLabel::Kind::Trivial) return "delta^{1/2}";
    return rep.display() + " (x) delta^{1/2}";
  }
  return rep.display();
}

bool StalkTable::empty_at(const BClass& b) const {
  auto it = entries.find(b);
  return it == entries.end() || it->second.empty();
}

void StalkTable::add(const BClass& b, int degree, const StalkLabel& l, Int mult) {
  if (mult == 0) return;
  auto& m = entries[b][degree][l];
  m += mult;
  if (m == 0) entries[b][degree].erase(l);
  if (entries[b][degree].empty()) entries[b].erase(degree);
  if (entries[b].empty()) entries.erase(b);
}

std::map<StalkLabel, Int> StalkTable::euler(const BClass& b) const {
  std::map<StalkLabel, Int> chi;
  auto it = entries.find(b);
  if (it == entries.end()) return chi;
  for (const auto& [deg, labels] : it->second)
    for (const auto& [l, m] : labels) {
      chi[l] += (deg % 2 == 0 ? 1 : -1) * m;
      if (chi[l] == 0) chi.erase(l);
    }
  return chi;
}

std::vector<BClass> StalkTable::support() const {
  std::vector<BClass> out;
  for (const auto& [b, degs] : entries)
    if (!degs.empty()) out.push_back(b);
  return out;
}

StalkTable renormalize(const RootDatum& d, const StalkTable& t) {
  StalkTable out;
  out.name = t.name;
  out.component = t.component;
  out.truncated = t.truncated;
  out.window_top = t.window_top;
  out.reference_checked = t.reference_checked;
  for (const auto& [b, degs] : t.entries) {
    Int s = shift(d, b);
    bool basic = is_basic(d, b);
    for (const auto& [deg, labels] : degs)
      for (const auto& [l, m] : labels) {
        StalkLabel nl = l;
        if (!basic) {
          if (!nl.delta_twist)
            throw Error("InternalError", "raw stalk without delta twist off the basic stratum");
          nl.delta_twist = false;
        }
        out.add(b, deg - static_cast<int>(s), nl, m);
      }
  }
  return out;
}

StalkTable seed_shriek(const RootDatum& d, const BClass& b, const RepLabel& pi) {
  StalkTable t;
  t.name = "i_{" + b.display + "!}(" + pi.display() + ")";
  t.component = "kappa=" + to_string(b.kappa_nf);
  StalkLabel l{pi, !is_basic(d, b)};
  t.add(b, static_cast<int>(shift(d, b)), l, 1);
  return t;
}

StalkTable shift_table(const StalkTable& t, int k) {
  StalkTable out;
  out.name = t.name + "[" + std::to_string(k) + "]";
  out.component = t.component;
  out.truncated = t.truncated;
  out.window_top = t.window_top;
  out.reference_checked = t.reference_checked;
  for (const auto& [b, degs] : t.entries)
    for (const auto& [deg, labels] : degs)
      for (const auto& [l, m] : labels) out.add(b, deg - k, l, m);
  return out;
}

StalkTable cone(const RootDatum& d, const StalkTable& a, const StalkTable& b) {
  (void)d;
  if (!a.entries.empty() && !b.entries.empty() && a.component != b.component)
    throw Error("BadInput", "cone operands on different components");
  StalkTable out;
  out.name = "cone(" + a.name + " -> " + b.name + ")";
  out.component = a.entries.empty() ? b.component : a.component;
  out.truncated = a.truncated || b.truncated;
  out.window_top = std::max(a.window_top, b.window_top);
  out.reference_checked = a.reference_checked && b.reference_checked;

  std::vector<BClass> strata;
  for (const auto& [s, _] : a.entries) strata.push_back(s);
  for (const auto& [s, _] : b.entries) strata.push_back(s);
  std::sort(strata.begin(), strata.end());
  strata.erase(std::unique(strata.begin(), strata.end()), strata.end());

  for (const auto& s : strata) {
    auto ia = a.entries.find(s);
    auto ib = b.entries.find(s);
    bool ha = ia != a.entries.end() && !ia->second.empty();
    bool hb = ib != b.entries.end() && !ib->second.empty();
    if (ha && hb) {
      for (const auto& [deg, labels] : ia->second) {
        (void)labels;
        if (ib->second.count(deg))
          throw Error("AmbiguousExtension",
                      "operands share degree " + std::to_string(deg) + " at stratum " + s.display);
      }
    }
    // long exact sequence splits: C^d = B^d + A^{d+1}
    if (hb)
      for (const auto& [deg, labels] : ib->second)
        for (const auto& [l, m] : labels) out.add(s, deg, l, m);
    if (ha)
      for (const auto& [deg, labels] : ia->second)
        for (const auto& [l, m] : labels) out.add(s, deg - 1, l, m);
  }
  return out;
}

int TrianglePlan::seed(const IntVec& lambda, const std::string& label) {
  steps.push_back({Op::Seed, -1, -1, 0, lambda, label});
  return static_cast<int>(steps.size()) - 1;
}
int TrianglePlan::cone(int a, int b, const std::string& label) {
  steps.push_back({Op::Cone, a, b, 0, {}, label});
  return static_cast<int>(steps.size()) - 1;
}
int TrianglePlan::shift(int a, int k, const std::string& label) {
  steps.push_back({Op::Shift, a, -1, k, {}, label});
  return static_cast<int>(steps.size()) - 1;
}

std::vector<StalkTable> execute(const RootDatum& d, const TrianglePlan& plan) {
  std::vector<StalkTable> out;
  for (const auto& step : plan.steps) {
    auto operand = [&](int i) -> const StalkTable& {
      if (i < 0 || i >= static_cast<int>(out.size()))
        throw Error("BadInput", "plan references a later or missing step");
      return out[static_cast<size_t>(i)];
    };
    StalkTable t;
    switch (step.op) {
      case TrianglePlan::Op::Seed: {
        AtomicClass ac = bmo_trivial(d, step.seed_lambda);
        t = seed_shriek(d, ac.b, ac.pi);
        break;
      }
      case TrianglePlan::Op::Cone:
        t = cone(d, operand(step.a), operand(step.b));
        break;
      case TrianglePlan::Op::Shift:
        t = shift_table(operand(step.a), step.shift_by);
        break;
      case TrianglePlan::Op::Rotate:
        t = shift_table(operand(step.a), 1);
        break;
    }
    if (!step.label.empty()) t.name = step.label;
    out.push_back(std::move(t));
  }
  return out;
}

BClass pgl2_stratum(const RootDatum& pgl2, int n) {
  return bmo_trivial(pgl2, IntVec{n}).b;
}

RepLabel pgl2_pi(const RootDatum& pgl2, int n) {
  return bmo_trivial(pgl2, IntVec{n}).pi;
}

namespace {

void require_pgl2(const RootDatum& d) {
  if (d.preset_name != "PGL(2)") throw Error("BadInput", "stalk families are PGL(2)-specific");
}

// F_n = fib(i_{b_n!}pi_n -> i_{b_{n-2}!}pi_{n-2}) = cone of the map shifted
// down one degree on both sides.
int plan_F(TrianglePlan& p, int n) {
  if (n <= 1) return p.seed(IntVec{n}, "F_" + std::to_string(n));
  int top = p.seed(IntVec{n}, "");
  int bot = p.seed(IntVec{n - 2}, "");
  int a = p.shift(top, -1, "");
  int b = p.shift(bot, -1, "");
  return p.cone(a, b, "F_" + std::to_string(n));
}

}  // namespace

StalkTable compute_F(const RootDatum& pgl2, int n) {
  require_pgl2(pgl2);
  if (n < 0) throw Error("BadInput", "n must be nonnegative");
  TrianglePlan p;
  int last = plan_F(p, n);
  auto tables = execute(pgl2, p);
  StalkTable t = tables[static_cast<size_t>(last)];
  // the odd family beyond F_1 has no independent reference table
  t.reference_checked = (n % 2 == 0) || n <= 2;
  return t;
}

StalkTable compute_sharp(const RootDatum& pgl2, int n) {
  require_pgl2(pgl2);
  if (n < 0) throw Error("BadInput", "n must be nonnegative");
  TrianglePlan p;
  int cur = p.seed(IntVec{n % 2}, "sharp_" + std::to_string(n % 2));
  for (int m = n % 2 + 2; m <= n; m += 2) {
    int f = plan_F(p, m);
    int fs = p.shift(f, -1, "");
    cur = p.cone(fs, cur, "sharp_" + std::to_string(m));
  }
  auto tables = execute(pgl2, p);
  StalkTable t = tables.back();
  t.reference_checked = (n % 2 == 0) || n <= 1;
  return t;
}

StalkTable compute_star(const RootDatum& pgl2, int n, int jmax) {
  require_pgl2(pgl2);
  if (n < 0 || jmax < 0) throw Error("BadInput", "bad star window");
  int top = n + 2 * jmax;
  TrianglePlan p;
  // window top: within the window the *-pushforward from b_top only
  // contributes its identity stalk
  int cur = p.seed(IntVec{top}, "star_" + std::to_string(top) + "|window");
  for (int m = top - 2; m >= n; m -= 2) {
    int f = plan_F(p, m + 2);
    int frot = p.shift(f, 1, "");
    int prev = p.shift(cur, -1, "");
    cur = p.cone(prev, frot, "star_" + std::to_string(m) + "|window");
  }
  auto tables = execute(pgl2, p);
  StalkTable t = tables.back();
  t.name = "star_" + std::to_string(n);
  t.truncated = true;
  t.window_top = top;
  return t;
}

PerversityReport perversity_check(const RootDatum& d, const StalkTable& t) {
  PerversityReport rep;
  for (const auto& [b, degs] : t.entries) {
    if (degs.empty()) continue;
    PerversityReport::Row row;
    row.stratum = b;
    row.max_degree = degs.rbegin()->first;
    row.bound = shift(d, b);
    row.within = row.max_degree <= row.bound;
    rep.all_within = rep.all_within && row.within;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

bool support_check(const StalkTable& t, const std::vector<BClass>& allowed) {
  for (const auto& b : t.support())
    if (std::find(allowed.begin(), allowed.end(), b) == allowed.end()) return false;
  return true;
}

}  // namespace wb
