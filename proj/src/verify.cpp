#include "abcensus/verify.hpp"

#include <algorithm>
#include <random>

namespace abcensus::verify {

namespace {

using spectra::GroupSpec;
using spectra::Rational;

std::string render_spec(const std::vector<u64>& orders) {
  std::string s;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) s += "x";
    s += std::to_string(orders[i]);
  }
  return s;
}

void check(Summary& summary, const ReportSink& sink, const std::string& identity,
           const std::string& input, const std::string& lhs,
           const std::string& rhs) {
  ++summary.checked;
  if (lhs != rhs) {
    ++summary.failed;
    if (sink) sink(PropertyReport{identity, input, lhs, rhs, false});
  }
}

// All ordered tuples (n_1,...,n_r) with r in [1, max_r], n_i in [1, max_n]
// and product <= max_product.
template <typename Fn>
void for_each_spec(unsigned max_r, u64 max_n, u128 max_product, Fn&& fn) {
  std::vector<u64> orders;
  auto rec = [&](auto&& self, u128 product) -> void {
    if (!orders.empty()) fn(orders);
    if (orders.size() == max_r) return;
    for (u64 n = 1; n <= max_n; ++n) {
      if (product * n > max_product) continue;
      orders.push_back(n);
      self(self, product * n);
      orders.pop_back();
    }
  };
  rec(rec, 1);
}

std::vector<u64> random_orders(std::mt19937_64& rng, unsigned max_r, u64 max_n,
                               u128 max_product) {
  std::uniform_int_distribution<unsigned> rd(1, max_r);
  std::uniform_int_distribution<u64> nd(1, max_n);
  for (;;) {
    const unsigned r = rd(rng);
    std::vector<u64> orders(r);
    u128 product = 1;
    for (auto& n : orders) {
      n = nd(rng);
      product *= n;
    }
    if (product <= max_product) return orders;
  }
}

u64 product_of(const std::vector<u64>& v) {
  u64 p = 1;
  for (u64 n : v) p *= n;
  return p;
}

}  // namespace

Summary forms_agree(const Options& opt, const ReportSink& sink) {
  Summary summary;
  for_each_spec(3, std::min<u64>(opt.max_n, 30), 20000, [&](const auto& orders) {
    const GroupSpec spec = GroupSpec::of(orders);
    for (u64 delta : arith::divisors(spec.exponent)) {
      check(summary, sink, "order-count-forms-agree",
            "spec=" + render_spec(orders) + " delta=" + std::to_string(delta),
            to_string(spectra::order_count_moebius(spec, delta)),
            to_string(spectra::order_count_lcm_convolution(spec, delta,
                                                           opt.caps)));
    }
  });
  return summary;
}

namespace {

void check_one_spec_against_oracle(const Options& opt, const ReportSink& sink,
                                   Summary& summary,
                                   const std::vector<u64>& orders) {
  const GroupSpec spec = GroupSpec::of(orders);
  const std::string name = render_spec(orders);
  const auto computed = spectra::full_spectrum(spec, opt.caps);
  const auto swept = oracle::oracle_spectrum(spec, opt.oracle_caps);
  check(summary, sink, "spectrum-entry-count", "spec=" + name,
        std::to_string(computed.entries.size()),
        std::to_string(swept.entries.size()));
  for (std::size_t i = 0;
       i < std::min(computed.entries.size(), swept.entries.size()); ++i) {
    const auto& f = computed.entries[i];
    const auto& o = swept.entries[i];
    check(summary, sink, "spectrum-vs-oracle",
          "spec=" + name + " delta=" + std::to_string(f.delta),
          to_string(f.order_count) + "," + to_string(f.cyclic_count),
          to_string(o.order_count) + "," + to_string(o.cyclic_count));
  }
  const auto subgroups = oracle::oracle_cyclic_subgroups(spec, opt.oracle_caps);
  check(summary, sink, "cyclic-total-vs-oracle", "spec=" + name,
        to_string(spectra::cyclic_total(spec, opt.caps)),
        std::to_string(subgroups.total));
  for (const auto& [order, count] : subgroups.by_order) {
    const auto* entry = computed.find(order);
    check(summary, sink, "cyclic-count-vs-oracle",
          "spec=" + name + " delta=" + std::to_string(order),
          entry ? to_string(entry->cyclic_count) : "missing",
          std::to_string(count));
  }
  // Average order: the closed-form sum vs the spectrum mean.
  i128 weighted = 0;
  for (const auto& e : swept.entries)
    weighted += static_cast<i128>(e.delta) * static_cast<i128>(e.order_count);
  check(summary, sink, "average-order-vs-spectrum", "spec=" + name,
        spectra::average_order(spec, opt.caps).str(),
        Rational(weighted, static_cast<i128>(spec.size)).str());
}

}  // namespace

Summary oracle_equivalence(const Options& opt, const ReportSink& sink) {
  Summary summary;
  for_each_spec(3, 20, opt.max_order, [&](const auto& orders) {
    check_one_spec_against_oracle(opt, sink, summary, orders);
  });
  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < 200; ++i) {
    check_one_spec_against_oracle(
        opt, sink, summary, random_orders(rng, 3, 60, opt.max_order));
  }
  return summary;
}

Summary multiplicativity(const Options& opt, const ReportSink& sink) {
  Summary summary;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<unsigned> rd(1, 3);
  std::uniform_int_distribution<u64> nd(1, std::min<u64>(opt.max_n, 30));
  for (int iter = 0; iter < 500; ++iter) {
    const unsigned r = rd(rng);
    std::vector<u64> ns(r), ms(r);
    for (auto& n : ns) n = nd(rng);
    do {
      for (auto& m : ms) m = nd(rng);
    } while (arith::gcd(product_of(ns), product_of(ms)) != 1);
    std::vector<u64> combined(r);
    for (unsigned i = 0; i < r; ++i) combined[i] = ns[i] * ms[i];
    const GroupSpec left = GroupSpec::of(ns);
    const GroupSpec right = GroupSpec::of(ms);
    const GroupSpec both = GroupSpec::of(combined);
    const std::string input = "spec=" + render_spec(ns) + " * " + render_spec(ms);

    check(summary, sink, "cyclic-total-multiplicative", input,
          to_string(spectra::cyclic_total(both, opt.caps)),
          to_string(checked_mul(spectra::cyclic_total(left, opt.caps),
                                spectra::cyclic_total(right, opt.caps))));

    check(summary, sink, "average-order-multiplicative", input,
          spectra::average_order(both, opt.caps).str(),
          (spectra::average_order(left, opt.caps) *
           spectra::average_order(right, opt.caps))
              .str());

    for (u64 delta : arith::divisors(both.exponent)) {
      const auto [a, b] =
          spectra::split_divisor(delta, left.exponent, right.exponent);
      const u64 phi = arith::euler_phi(delta);
      const u128 lhs = spectra::order_count_moebius(both, delta) / phi;
      const u128 rhs =
          checked_mul(spectra::order_count_moebius(left, a) /
                          arith::euler_phi(a),
                      spectra::order_count_moebius(right, b) /
                          arith::euler_phi(b));
      check(summary, sink, "cyclic-count-multiplicative",
            input + " delta=" + std::to_string(delta), to_string(lhs),
            to_string(rhs));
    }

    // Primary-component factorization of c and c_delta for the combined spec.
    u128 primary_product = 1;
    std::vector<std::pair<u64, GroupSpec>> components;
    for (const auto& [p, e] : arith::factorize(both.exponent).factors) {
      std::vector<u64> part(r);
      for (unsigned i = 0; i < r; ++i) {
        u64 pe = 1, n = combined[i];
        while (n % p == 0) {
          pe *= p;
          n /= p;
        }
        part[i] = pe;
      }
      const GroupSpec comp = GroupSpec::of(part);
      primary_product =
          checked_mul(primary_product, spectra::cyclic_total(comp, opt.caps));
      components.emplace_back(p, comp);
    }
    check(summary, sink, "cyclic-total-primary-product",
          "spec=" + render_spec(combined),
          to_string(spectra::cyclic_total(both, opt.caps)),
          to_string(primary_product));
    for (u64 delta : arith::divisors(both.exponent)) {
      u128 product = 1;
      for (const auto& [p, comp] : components) {
        u64 dp = 1, d = delta;
        while (d % p == 0) {
          dp *= p;
          d /= p;
        }
        product = checked_mul(product,
                              spectra::order_count_moebius(comp, dp) /
                                  arith::euler_phi(dp));
      }
      check(summary, sink, "cyclic-count-primary-product",
            "spec=" + render_spec(combined) + " delta=" + std::to_string(delta),
            to_string(spectra::order_count_moebius(both, delta) /
                      arith::euler_phi(delta)),
            to_string(product));
    }
  }
  return summary;
}

Summary jordan(const Options& opt, const ReportSink& sink) {
  Summary summary;
  for (unsigned r = 1; r <= opt.max_r; ++r) {
    for (u64 n = 1; n <= opt.max_n; ++n) {
      const GroupSpec spec = GroupSpec::of(std::vector<u64>(r, n));
      for (u64 delta : arith::divisors(n)) {
        check(summary, sink, "jordan-specialization",
              "r=" + std::to_string(r) + " n=" + std::to_string(n) +
                  " delta=" + std::to_string(delta),
              to_string(spectra::order_count_moebius(spec, delta)),
              to_string(arith::jordan_phi(r, delta)));
      }
    }
  }
  return summary;
}

Summary von_sterneck(const Options& opt, const ReportSink& sink) {
  Summary summary;
  for (unsigned r = 1; r <= opt.max_r; ++r) {
    for (u64 delta = 1; delta <= 200; ++delta) {
      check(summary, sink, "von-sterneck",
            "r=" + std::to_string(r) + " delta=" + std::to_string(delta),
            to_string(spectra::von_sterneck(r, delta, opt.caps)),
            to_string(arith::jordan_phi(r, delta)));
    }
  }
  return summary;
}

Summary pgroup_reduction(const Options& opt, const ReportSink& sink) {
  Summary summary;
  for (u64 p : {2, 3, 5}) {
    std::vector<unsigned> lambdas;
    auto rec = [&](auto&& self, unsigned lo) -> void {
      if (!lambdas.empty()) {
        const auto type = spectra::PGroupType::of(p, lambdas);
        std::vector<u64> orders;
        for (unsigned l : lambdas) {
          u64 pe = 1;
          for (unsigned i = 0; i < l; ++i) pe *= p;
          orders.push_back(pe);
        }
        const GroupSpec spec = GroupSpec::of(orders);
        const auto spectrum = spectra::full_spectrum(spec, opt.caps);
        const bool oracle_fits = spec.size <= opt.oracle_caps.elements;
        const auto swept =
            oracle_fits
                ? oracle::oracle_cyclic_subgroups(spec, opt.oracle_caps)
                : oracle::CyclicSubgroupCount{};
        const unsigned max_nu = lambdas.back();
        u64 p_nu = 1;
        for (unsigned nu = 1; nu <= max_nu; ++nu) {
          p_nu *= p;
          const std::string input = "p=" + std::to_string(p) + " type=(" +
                                    render_spec(orders) + ") nu=" +
                                    std::to_string(nu);
          const u128 by_type = spectra::cyclic_count_pgroup_type(type, nu);
          check(summary, sink, "pgroup-type-vs-prime-power", input,
                to_string(by_type),
                to_string(spectra::cyclic_count_prime_power(p, lambdas, nu)));
          const auto* entry = spectrum.find(p_nu);
          check(summary, sink, "pgroup-type-vs-spectrum", input,
                to_string(by_type),
                entry ? to_string(entry->cyclic_count) : "missing");
          if (oracle_fits) {
            auto it = swept.by_order.find(p_nu);
            check(summary, sink, "pgroup-type-vs-oracle", input,
                  to_string(by_type),
                  it == swept.by_order.end() ? "0" : std::to_string(it->second));
          }
        }
        // Past the exponent there are no cyclic subgroups of that order.
        check(summary, sink, "pgroup-type-beyond-exponent",
              "p=" + std::to_string(p) + " type=(" + render_spec(orders) + ")",
              to_string(spectra::cyclic_count_pgroup_type(type, max_nu + 1)),
              "0");
      }
      if (lambdas.size() == 4) return;
      for (unsigned l = lo; l <= 4; ++l) {
        lambdas.push_back(l);
        self(self, l);
        lambdas.pop_back();
      }
    };
    rec(rec, 1);
  }
  return summary;
}

Summary rank2_subgroups(const Options& opt, const ReportSink& sink) {
  Summary summary;
  for (u64 n1 = 1; n1 <= 60; ++n1) {
    for (u64 n2 = 1; n2 <= 60; ++n2) {
      check(summary, sink, "rank2-gcd-sum",
            "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2),
            to_string(spectra::cyclic_total_rank2(n1, n2, opt.caps)),
            to_string(spectra::cyclic_total(GroupSpec::of({n1, n2}),
                                            opt.caps)));
    }
  }
  for (u64 n1 = 1; n1 <= 40; ++n1) {
    for (u64 n2 = 1; n2 <= 40; ++n2) {
      if (n1 * n2 > 2000) continue;
      check(summary, sink, "subgroup-total-vs-oracle",
            "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2),
            to_string(spectra::subgroup_total_rank2(n1, n2, opt.caps)),
            std::to_string(
                oracle::oracle_all_subgroups_rank2(n1, n2, opt.oracle_caps)));
    }
  }
  return summary;
}

Summary all(const Options& opt, const ReportSink& sink) {
  Summary summary;
  summary += forms_agree(opt, sink);
  summary += oracle_equivalence(opt, sink);
  summary += multiplicativity(opt, sink);
  summary += jordan(opt, sink);
  summary += von_sterneck(opt, sink);
  summary += pgroup_reduction(opt, sink);
  summary += rank2_subgroups(opt, sink);
  return summary;
}

Summary run_suite(const std::string& name, const Options& opt,
                  const ReportSink& sink) {
  if (name == "forms-agree") return forms_agree(opt, sink);
  if (name == "oracle") return oracle_equivalence(opt, sink);
  if (name == "multiplicativity") return multiplicativity(opt, sink);
  if (name == "jordan") return jordan(opt, sink);
  if (name == "von-sterneck") return von_sterneck(opt, sink);
  if (name == "pgroup-reduction") return pgroup_reduction(opt, sink);
  if (name == "rank2-subgroups") return rank2_subgroups(opt, sink);
  if (name == "all") return all(opt, sink);
  throw ParseError("unknown verify suite: " + name);
}

std::vector<std::string> suite_names() {
  return {"forms-agree",      "oracle",      "multiplicativity",
          "jordan",           "von-sterneck", "pgroup-reduction",
          "rank2-subgroups",  "all"};
}

}  // namespace abcensus::verify
