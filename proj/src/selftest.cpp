#include "hfsplice/selftest.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>

#include "hfsplice/catalog.hpp"
#include "hfsplice/cones.hpp"
#include "hfsplice/f2la.hpp"
#include "hfsplice/levels.hpp"
#include "hfsplice/splice.hpp"

namespace hfs::selftest {

using levels::EtaStrategy;
using levels::GroupKind;

namespace {

constexpr EtaStrategy kBuiltinStrategies[] = {EtaStrategy::PhiPsi, EtaStrategy::PhiBarPsiBar, EtaStrategy::Zero};

// Runs `body`, which returns an empty string on success or a failure detail.
void run(std::vector<CheckResult>& out, const std::string& subject, const std::string& check,
         const std::function<std::string()>& body) {
  CheckResult r{subject, check, false, {}};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(r));
}

std::string expect_equal(std::size_t lhs, std::size_t rhs, const std::string& what) {
  if (lhs == rhs) return {};
  std::ostringstream os;
  os << what << ": " << lhs << " != " << rhs;
  return os.str();
}

std::size_t homology_rank(const f2la::F2Matrix& d) { return f2la::homology(d).rank(); }

}  // namespace

std::vector<CheckResult> check_complex(const cfk::FilteredKnotComplex& k) {
  std::vector<CheckResult> out;
  const std::string& name = k.name();

  run(out, name, "invariants", [&] {
    std::string detail;
    for (const auto& d : cfk::check_invariants(k)) detail += "[" + d.invariant + "] " + d.message + "; ";
    return detail;
  });

  const int g = k.genus_bound();
  run(out, name, "slices", [&]() -> std::string {
    for (int s = -g - 1; s <= g + 1; ++s) {
      const auto ge = cfk::slice(k, s, cfk::SliceMode::AtLeast);
      const auto gt = cfk::slice(k, s, cfk::SliceMode::Above);
      const auto eq = cfk::slice(k, s, cfk::SliceMode::Exactly);
      const auto next = cfk::slice(k, s + 1, cfk::SliceMode::AtLeast);
      for (const auto* sub : {&ge, &gt}) {
        if (!f2la::is_chain_map(sub->inclusion, sub->differential, k.differential()))
          return "B{>=" + std::to_string(s) + "} is not a subcomplex";
      }
      if (eq.size() != ge.size() - next.size()) return "dim B{" + std::to_string(s) + "} bookkeeping";
      if (!(eq.differential * eq.differential).is_zero()) return "B{" + std::to_string(s) + "} has d^2 != 0";
    }
    return {};
  });

  run(out, name, "hinf-symmetry", [&]() -> std::string {
    for (int s = 1; s <= g; ++s) {
      const auto up = homology_rank(cfk::slice(k, s, cfk::SliceMode::Exactly).differential);
      const auto down = homology_rank(cfk::slice(k, -s, cfk::SliceMode::Exactly).differential);
      if (up != down) return expect_equal(up, down, "rank H(B{" + std::to_string(s) + "}) vs H(B{-s})");
    }
    return {};
  });

  std::optional<levels::LevelGroups> groups;
  std::optional<levels::LevelMaps> maps;
  run(out, name, "level-maps", [&] {
    groups = levels::level_groups(k);
    maps = levels::level_maps(k, *groups);
    return std::string();
  });
  if (!maps) return out;

  const std::size_t h_inf = groups->total(GroupKind::Infinity);
  const std::size_t h_one = groups->total(GroupKind::One);
  const std::size_t h_zero = groups->total(GroupKind::Zero);
  auto cone_check = [&](const std::string& check, std::size_t target, std::size_t a, std::size_t b,
                        const f2la::F2Matrix& m) {
    run(out, name, check, [&] { return expect_equal(target + 2 * f2la::rank(m), a + b, "dimensions"); });
  };
  cone_check("cone-phi", h_zero, h_one, h_inf, maps->phi_total);
  cone_check("cone-phibar", h_zero, h_one, h_inf, maps->phibar_total);
  cone_check("cone-psi", h_inf, h_zero, h_one, maps->psi_total);
  cone_check("cone-psibar", h_inf, h_zero, h_one, maps->psibar_total);

  run(out, name, "exact-psi-phibar", [&]() -> std::string {
    for (const auto& [s, psi] : maps->psi)
      if (!f2la::image_equals_kernel(psi, maps->phibar.at(s))) return "im psi != ker phibar at s = " + std::to_string(s);
    return {};
  });
  run(out, name, "exact-psibar-phi", [&]() -> std::string {
    for (const auto& [s, psibar] : maps->psibar)
      if (!f2la::image_equals_kernel(psibar, maps->phi.at(s))) return "im psibar != ker phi at s = " + std::to_string(s);
    return {};
  });

  auto chain_cone = [&](levels::MapKind kind, std::size_t a, std::size_t b, const f2la::F2Matrix& m) {
    std::size_t total = 0;
    for (int s = groups->s_min(); s <= groups->s_max(); ++s) {
      const auto f = levels::chain_map(k, kind, s);
      total += homology_rank(cones::mapping_cone(f.matrix, f.source_differential, f.target_differential));
    }
    return expect_equal(total + 2 * f2la::rank(m), a + b, "rank H(cone)");
  };
  run(out, name, "chain-cone-phi",
      [&] { return chain_cone(levels::MapKind::Phi, h_one, h_inf, maps->phi_total); });
  run(out, name, "chain-cone-psi",
      [&] { return chain_cone(levels::MapKind::Psi, h_zero, h_one, maps->psi_total); });

  run(out, name, "surgery-n1", [&]() -> std::string {
    if (levels::hfk_surgery(k, 1) != groups->table(GroupKind::One)) return "n = 1 table differs from H_1";
    return {};
  });

  const auto unknot = cfk::catalog("unknot");
  const std::size_t ambient = homology_rank(k.differential());
  for (auto strategy : kBuiltinStrategies) {
    run(out, name, "splice-unknot[" + std::string(levels::to_string(strategy)) + "]", [&] {
      const auto m = levels::level_maps(k, *groups, strategy);
      const auto gu = levels::level_groups(unknot);
      const auto mu = levels::level_maps(unknot, gu, strategy);
      const auto cube = splice::build_cube(m, mu);
      const auto r = splice::summarize(cube, strategy).rank;
      std::string detail = expect_equal(r, ambient, "splice with unknot vs rank H(B)");
      if (detail.empty()) detail = expect_equal(splice::reduced_homology_rank(cube), r, "reduced cube rank");
      return detail;
    });
  }

  if (k.has_maslov()) {
    run(out, name, "alexander-symmetry", [&]() -> std::string {
      const auto p = levels::alexander_polynomial(k);
      const int hi = p.min_exponent + static_cast<int>(p.coefficients.size()) - 1;
      for (int e = p.min_exponent; e <= hi; ++e)
        if (p.coefficient(e) != p.coefficient(-e)) return "not symmetric: " + p.to_string();
      return {};
    });
  }
  return out;
}

std::vector<CheckResult> check_pair(const cfk::FilteredKnotComplex& a, const cfk::FilteredKnotComplex& b) {
  std::vector<CheckResult> out;
  const std::string subject = a.name() + " x " + b.name();
  const auto ga = levels::level_groups(a);
  const auto gb = levels::level_groups(b);
  for (auto strategy : kBuiltinStrategies) {
    const std::string tag = "[" + std::string(levels::to_string(strategy)) + "]";
    run(out, subject, "splice" + tag, [&]() -> std::string {
      const auto ma = levels::level_maps(a, ga, strategy);
      const auto mb = levels::level_maps(b, gb, strategy);
      const auto ab = splice::build_cube(ma, mb);
      const auto ba = splice::build_cube(mb, ma);
      const auto r_ab = splice::summarize(ab, strategy).rank;
      const auto r_ba = splice::summarize(ba, strategy).rank;
      if (r_ab != r_ba) return expect_equal(r_ab, r_ba, "swap symmetry");
      if (r_ab % 2 == 0) return "even rank " + std::to_string(r_ab);
      return expect_equal(splice::reduced_homology_rank(ab), r_ab, "reduced cube rank");
    });
  }
  return out;
}

std::size_t failures(const std::vector<CheckResult>& results) {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
}

}  // namespace hfs::selftest
