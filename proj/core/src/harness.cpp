#include "shilov/harness.hpp"

#include "shilov/errors.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace shilov {

ConvergenceReport theorem_harness(const MetricSpec& spec, const HomPoly& s, int n_max,
                                  const HarnessOptions& opts) {
  if (s.is_zero()) throw ValidationError("theorem_harness: zero section");
  if (s.degree() != 1) throw ValidationError("theorem_harness: section must have degree 1");
  if (n_max < 0) throw ValidationError("theorem_harness: n_max must be >= 0");

  ConvergenceReport report;
  EqMeasure mu = eq_measure(spec);
  report.rhs = pair_measure(mu, spec, s);

  bool first = true;
  for (const auto& z : spec.points()) {
    Rat v = -point_val(z, s).value();
    if (first) {
      report.band_low = v;
      report.band_high = v;
      first = false;
    } else {
      report.band_low = std::min(report.band_low, v);
      report.band_high = std::max(report.band_high, v);
    }
  }

  report.rows.resize(static_cast<std::size_t>(n_max));
  if (n_max == 0) {
    report.fitted_c = 0;
    return report;
  }

  // degrees are independent; strided workers keep the row order fixed
  unsigned workers = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n_max));
  std::vector<std::exception_ptr> failures(workers);

  auto run_degree = [&](int n) {
    ValMatrix m = val_matrix(mult_operator(s, n), spec);
    LogVal top = wedge_top_val(m, opts.svd);
    ConvergenceRow row;
    row.n = n;
    row.chi = hilbert_chi(spec.dim_projective(), n);
    row.lhs = -top.value() / row.chi;
    row.rhs = report.rhs;
    row.err = row.lhs - row.rhs;
    row.n_err = Rat(n) * row.err;
    report.rows[static_cast<std::size_t>(n - 1)] = std::move(row);
  };

  if (workers <= 1) {
    for (int n = 1; n <= n_max; ++n) run_degree(n);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        try {
          for (int n = 1 + static_cast<int>(w); n <= n_max; n += static_cast<int>(workers))
            run_degree(n);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
  }

  report.fitted_c = 0;
  for (const auto& row : report.rows) {
    Rat a = row.n_err < 0 ? Rat(-row.n_err) : row.n_err;
    if (a > report.fitted_c) report.fitted_c = std::move(a);
  }
  return report;
}

std::string report_csv(const ConvergenceReport& report) {
  std::string out = "n,chi,lhs,rhs,err,n_err\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.chi);
    out += ',';
    out += rat_str(row.lhs);
    out += ',';
    out += rat_str(row.rhs);
    out += ',';
    out += rat_str(row.err);
    out += ',';
    out += rat_str(row.n_err);
    out += '\n';
  }
  return out;
}

}  // namespace shilov
