#include <algorithm>
#include <map>

#include "cubictors/elliptic.hpp"
#include "cubictors/errors.hpp"

namespace cubictors {

std::string TorsionGroup::to_string() const {
  if (a == 1) return "Z/" + std::to_string(b);
  return "Z/" + std::to_string(a) + " x Z/" + std::to_string(b);
}

std::optional<TorsionGroup> TorsionGroup::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  auto number = [](const std::string& t) -> std::optional<int> {
    if (t.size() < 3 || t.compare(0, 2, "Z/") != 0) return std::nullopt;
    try {
      std::size_t used = 0;
      int v = std::stoi(t.substr(2), &used);
      if (used != t.size() - 2 || v < 1) return std::nullopt;
      return v;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  auto pos = s.find('x');
  if (pos == std::string::npos) {
    auto b = number(s);
    if (!b) return std::nullopt;
    return TorsionGroup{1, *b};
  }
  auto a = number(s.substr(0, pos));
  auto b = number(s.substr(pos + 1));
  if (!a || !b || *b % *a != 0) return std::nullopt;
  return TorsionGroup{*a, *b};
}

const std::vector<TorsionGroup>& mazur_groups() {
  static const std::vector<TorsionGroup> groups = [] {
    std::vector<TorsionGroup> g;
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) g.push_back({1, n});
    for (int n : {1, 2, 3, 4}) g.push_back({2, 2 * n});
    return g;
  }();
  return groups;
}

const std::vector<TorsionGroup>& najman_groups() {
  static const std::vector<TorsionGroup> groups = [] {
    std::vector<TorsionGroup> g;
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 18, 21}) g.push_back({1, n});
    for (int n : {1, 2, 3, 4, 7}) g.push_back({2, 2 * n});
    return g;
  }();
  return groups;
}

bool in_mazur_list(const TorsionGroup& g) {
  const auto& l = mazur_groups();
  return std::find(l.begin(), l.end(), g) != l.end();
}

bool in_najman_list(const TorsionGroup& g) {
  const auto& l = najman_groups();
  return std::find(l.begin(), l.end(), g) != l.end();
}

bool divides(const TorsionGroup& small, const TorsionGroup& big) {
  return big.a % small.a == 0 && big.b % small.b == 0;
}

namespace {

int valuation(int n, int p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool coords_less(const FieldElement& a, const FieldElement& b) { return a.coords() < b.coords(); }

struct PrimaryPart {
  int i = 0;  // Z/l^i x Z/l^j, i <= j
  int j = 0;
  std::vector<CurvePoint> points;  // includes O
};

PrimaryPart primary_part(const EllipticCurve& S, int l, int max_exp, const Field& K, const RootOptions& opts) {
  PrimaryPart part;
  part.points.push_back(CurvePoint::at_infinity());
  const FieldElement& A = S.a4();
  const FieldElement& B = S.a6();
  RationalPoly prev = RationalPoly::constant(1);
  long count = 1;
  for (int k = 1, n = l; k <= max_exp; ++k, n *= l) {
    RationalPoly full = division_polynomial(S, n);
    RationalPoly cof = exact_quotient(full, prev);
    prev = std::move(full);
    long found = 0;
    for (const auto& x : roots_in_field(cof, K, opts)) {
      FieldElement rhs = (x * x + A) * x + B;
      if (rhs.is_zero()) {
        part.points.push_back(CurvePoint::affine(x, rhs));
        ++found;
        continue;
      }
      auto y = sqrt_in_field(rhs, K, opts);
      if (!y) continue;
      part.points.push_back(CurvePoint::affine(x, *y));
      part.points.push_back(CurvePoint::affine(x, -*y));
      found += 2;
    }
    if (found == 0) break;
    long ratio = (count + found) / count;
    count += found;
    if (ratio == l * l) {
      ++part.i;
      ++part.j;
    } else if (ratio == l) {
      ++part.j;
    } else {
      throw ContractViolation("inconsistent " + std::to_string(l) + "-power torsion count");
    }
  }
  return part;
}

}  // namespace

TorsionData torsion_points(const EllipticCurve& E, const Field& K, const RootOptions& opts) {
  if (!E.has_rational_coefficients()) {
    throw InvalidInput("torsion computation needs a curve with rational coefficients");
  }
  const EllipticCurve Eq = E.over(nullptr);
  auto [S0, w0] = short_model(Eq);
  Integer lam;
  const auto& A0 = S0.a4().coords()[0];
  const auto& B0 = S0.a6().coords()[0];
  mpz_lcm(lam.get_mpz_t(), A0.value().get_den_mpz_t(), B0.value().get_den_mpz_t());
  WeierstrassChange scale;
  scale.u = FieldElement(Rational(Integer(1), lam));
  const WeierstrassChange to_short = w0.then(scale);
  const EllipticCurve S = Eq.change(to_short);

  const bool over_q = !K;
  std::vector<TorsionGroup> candidates = over_q ? mazur_groups() : najman_groups();
  TorsionGroup group;
  std::vector<std::vector<CurvePoint>> parts;
  for (int l : {2, 3, 7, 5, 13}) {
    int max_exp = 0;
    for (const auto& g : candidates) max_exp = std::max(max_exp, valuation(g.b, l));
    if (max_exp == 0) continue;
    PrimaryPart part = primary_part(S, l, max_exp, K, opts);
    std::erase_if(candidates, [&](const TorsionGroup& g) {
      return valuation(g.a, l) != part.i || valuation(g.b, l) != part.j;
    });
    if (candidates.empty()) {
      throw ContractViolation("torsion with " + std::to_string(l) + "-part Z/" + std::to_string(ipow(l, part.i)) +
                              " x Z/" + std::to_string(ipow(l, part.j)) + " is outside the " +
                              (over_q ? "Mazur" : "Najman") + " list");
    }
    group.a *= ipow(l, part.i);
    group.b *= ipow(l, part.j);
    parts.push_back(std::move(part.points));
  }

  // Remaining candidates agree with `group` on every prime that can occur.
  std::vector<CurvePoint> all{CurvePoint::at_infinity()};
  for (const auto& pts : parts) {
    std::vector<CurvePoint> next;
    for (const auto& P : all)
      for (const auto& Q : pts) next.push_back(point_add(S, P, Q));
    all = std::move(next);
  }
  if (static_cast<int>(all.size()) != group.order()) {
    throw ContractViolation("torsion point count does not match the group order");
  }
  const WeierstrassChange back = to_short.inverse();
  std::vector<std::pair<long, CurvePoint>> keyed;
  const EllipticCurve EK = K ? Eq.over(K) : Eq;
  for (const auto& P : all) {
    CurvePoint Q = transport(back, P);
    long ord = *point_order(S, P, group.order());
    if (!EK.contains(Q)) throw ContractViolation("torsion point does not map back onto the input model");
    keyed.emplace_back(ord, std::move(Q));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    if (a.second.infinity || b.second.infinity) return a.second.infinity && !b.second.infinity;
    if (!(a.second.x == b.second.x)) return coords_less(a.second.x, b.second.x);
    return coords_less(a.second.y, b.second.y);
  });
  TorsionData out;
  out.group = group;
  for (auto& kp : keyed) out.points.push_back(std::move(kp.second));
  return out;
}

TorsionGroup torsion_subgroup(const EllipticCurve& E, const Field& K, const RootOptions& opts) {
  return torsion_points(E, K, opts).group;
}

}  // namespace cubictors
