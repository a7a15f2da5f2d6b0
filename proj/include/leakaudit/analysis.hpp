#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/tools/minima.hpp>
#include <fmt/format.h>

#include "leakaudit/error.hpp"
#include "leakaudit/metrics.hpp"
#include "leakaudit/util/csv.hpp"

namespace leakaudit::analysis {

// ---- NLL ratio matrices ----------------------------------------------------

/// cells[row][col] = mean_nll(col) / mean_nll(row).
struct RatioMatrix {
  std::string model;
  std::vector<std::string> datasets;
  std::vector<std::vector<double>> cells;

  double at(std::string_view row, std::string_view col) const {
    return cells.at(index(row)).at(index(col));
  }

  std::size_t index(std::string_view name) const {
    auto it = std::find(datasets.begin(), datasets.end(), name);
    if (it == datasets.end()) throw Error(ErrorKind::validation, "unknown dataset: " + std::string(name));
    return static_cast<std::size_t>(it - datasets.begin());
  }
};

/// Ratio matrix over one model's summaries, in input order.
inline RatioMatrix ratio_matrix(const std::vector<metrics::DatasetSummary>& summaries) {
  RatioMatrix m;
  std::vector<double> nll;
  for (const auto& s : summaries) {
    if (!m.datasets.empty() && s.model != m.model) {
      throw Error(ErrorKind::validation, "ratio matrix mixes models '" + m.model + "' and '" + s.model + "'");
    }
    m.model = s.model;
    if (std::find(m.datasets.begin(), m.datasets.end(), s.dataset) != m.datasets.end()) {
      throw Error(ErrorKind::validation, "duplicate dataset in ratio matrix: " + s.dataset);
    }
    if (!(s.mean_nll > 0.0) || !std::isfinite(s.mean_nll)) {
      throw Error(ErrorKind::domain, "mean NLL of '" + s.dataset + "' must be positive");
    }
    m.datasets.push_back(s.dataset);
    nll.push_back(s.mean_nll);
  }
  m.cells.assign(nll.size(), std::vector<double>(nll.size(), 1.0));
  for (std::size_t r = 0; r < nll.size(); ++r) {
    for (std::size_t c = 0; c < nll.size(); ++c) m.cells[r][c] = nll[c] / nll[r];
  }
  return m;
}

inline std::string ratio_matrix_csv(const RatioMatrix& m) {
  util::CsvRow header{""};
  header.insert(header.end(), m.datasets.begin(), m.datasets.end());
  std::string out = util::csv_line(header);
  for (std::size_t r = 0; r < m.datasets.size(); ++r) {
    util::CsvRow row{m.datasets[r]};
    for (double v : m.cells[r]) row.push_back(fmt::format("{:.4f}", v));
    out += util::csv_line(row);
  }
  return out;
}

// ---- regression rows -------------------------------------------------------

struct ModelInfo {
  std::string name;
  double parameters_b = 0.0;
  std::optional<double> budget_t;
  std::string tokenizer_family;
  std::optional<int> cutoff_year;
};

/// Columns: model, parameters_b, budget_t, tokenizer_family, cutoff_year.
/// An empty budget means unknown.
inline std::vector<ModelInfo> parse_models(const util::CsvTable& table) {
  const auto name = table.column("model"), params = table.column("parameters_b"),
             budget = table.column("budget_t"), family = table.column("tokenizer_family");
  std::optional<std::size_t> cutoff;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (table.header[i] == "cutoff_year") cutoff = i;
  }
  std::vector<ModelInfo> out;
  for (const auto& row : table.rows) {
    ModelInfo m{row[name], metrics::parse_metric(row[params]), std::nullopt, row[family], std::nullopt};
    if (!row[budget].empty()) m.budget_t = metrics::parse_metric(row[budget]);
    if (cutoff && !row[*cutoff].empty()) m.cutoff_year = std::stoi(row[*cutoff]);
    if (!(m.parameters_b > 0.0)) {
      throw Error(ErrorKind::validation, "model '" + m.name + "' needs parameters_b > 0");
    }
    if (m.budget_t && !(*m.budget_t > 0.0)) {
      throw Error(ErrorKind::validation, "model '" + m.name + "' needs budget_t > 0 when known");
    }
    out.push_back(std::move(m));
  }
  return out;
}

enum class Response { nll, ngram };

inline std::string_view to_string(Response r) { return r == Response::nll ? "NLL" : "5-gram"; }

struct RegressionRow {
  std::string model;
  double parameters = 0.0;  ///< billions, possibly centered
  double budget = 0.0;      ///< trillions of tokens, possibly centered
  std::string dataset;
  std::string tokenizer_family;
  double response = 0.0;
};

struct RowSet {
  std::vector<RegressionRow> rows;
  /// Models left out, with the reason (unknown budget, no metadata, ...).
  std::vector<std::pair<std::string, std::string>> excluded;
};

inline RowSet build_rows(const std::vector<metrics::DatasetSummary>& summaries,
                         const std::vector<ModelInfo>& models, Response response) {
  std::map<std::string, const ModelInfo*> by_name;
  for (const auto& m : models) by_name[m.name] = &m;
  RowSet out;
  std::set<std::string> excluded;
  for (const auto& s : summaries) {
    const double y = response == Response::nll ? s.mean_nll : s.mean_ngram;
    auto it = by_name.find(s.model);
    std::string reason;
    if (it == by_name.end()) reason = "no model metadata";
    else if (!it->second->budget_t) reason = "unknown training budget";
    else if (std::isnan(y)) reason = "missing response";
    if (!reason.empty()) {
      if (excluded.insert(s.model).second) out.excluded.emplace_back(s.model, reason);
      continue;
    }
    out.rows.push_back({s.model, it->second->parameters_b, *it->second->budget_t, s.dataset,
                        it->second->tokenizer_family, y});
  }
  return out;
}

/// Shifts predictors so the reference model (6B parameters, 1T tokens by
/// default) sits at zero; the intercept then reads as that model's value.
inline std::vector<RegressionRow> center_predictors(std::vector<RegressionRow> rows,
                                                    double reference_parameters = 6.0,
                                                    double reference_budget = 1.0) {
  for (auto& r : rows) {
    r.parameters -= reference_parameters;
    r.budget -= reference_budget;
  }
  return rows;
}

// ---- mixed model -----------------------------------------------------------

struct Coefficient {
  std::string term;
  double estimate = 0.0;
  double se = 0.0;
  double z = 0.0;
  double p = 1.0;
  std::string stars;
};

struct VarianceComponent {
  std::string group;
  std::size_t levels = 0;
  double variance = 0.0;
  bool clamped = false;  ///< estimate sat on the zero boundary
};

struct RegressionFit {
  Response response = Response::nll;
  std::vector<Coefficient> coefficients;  // intercept, parameters, training budget
  std::vector<VarianceComponent> random_effects;  // dataset, tokenizer family
  double residual_variance = 0.0;
  double reml_criterion = 0.0;  ///< -2 x restricted log-likelihood
  std::size_t n_obs = 0;
  int iterations = 0;
  bool converged = false;
  bool exact_fit = false;
  /// Relative standard deviations (sigma_group / sigma) at the optimum.
  std::vector<double> theta;

  const Coefficient& coefficient(std::string_view term) const {
    for (const auto& c : coefficients) if (c.term == term) return c;
    throw Error(ErrorKind::validation, "no coefficient named " + std::string(term));
  }
};

struct FitOptions {
  int max_iterations = 200;
  double tolerance = 1e-10;
  double theta_max = 1e3;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, std::vector<double> last_theta, double last_criterion)
      : Error(ErrorKind::convergence, msg), theta_(std::move(last_theta)), criterion_(last_criterion) {}

  const std::vector<double>& last_theta() const { return theta_; }
  double last_criterion() const { return criterion_; }

 private:
  std::vector<double> theta_;
  double criterion_;
};

inline std::string significance_stars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

namespace detail {

struct Design {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
  std::vector<Eigen::MatrixXd> ZZt;  // Z_g Z_g^T per grouping
  std::vector<Eigen::MatrixXd> Z;
  std::vector<std::size_t> levels;
};

inline Eigen::MatrixXd indicator(const std::vector<std::string>& labels, std::size_t& levels) {
  std::map<std::string, std::size_t> ids;
  for (const auto& l : labels) ids.emplace(l, 0);
  std::size_t k = 0;
  for (auto& [label, id] : ids) id = k++;
  levels = ids.size();
  Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(labels.size()),
                                            static_cast<Eigen::Index>(levels));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Z(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(ids[labels[i]])) = 1.0;
  }
  return Z;
}

inline Design make_design(const std::vector<RegressionRow>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Design d;
  d.X.resize(n, 3);
  d.y.resize(n);
  std::vector<std::string> ds, fam;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    d.X(i, 0) = 1.0;
    d.X(i, 1) = r.parameters;
    d.X(i, 2) = r.budget;
    d.y(i) = r.response;
    ds.push_back(r.dataset);
    fam.push_back(r.tokenizer_family);
  }
  for (const auto* labels : {&ds, &fam}) {
    std::size_t levels = 0;
    auto Z = indicator(*labels, levels);
    d.ZZt.push_back(Z * Z.transpose());
    d.Z.push_back(std::move(Z));
    d.levels.push_back(levels);
  }
  return d;
}

struct Profile {
  double criterion = 0.0;
  Eigen::VectorXd beta;
  Eigen::MatrixXd xtvx;
  double sigma2 = 0.0;
  Eigen::MatrixXd V;
};

/// Profiled REML criterion at relative standard deviations theta.
inline Profile profile(const Design& d, const std::vector<double>& theta) {
  const auto n = d.X.rows();
  const auto p = d.X.cols();
  Profile out;
  out.V = Eigen::MatrixXd::Identity(n, n);
  for (std::size_t g = 0; g < theta.size(); ++g) out.V += theta[g] * theta[g] * d.ZZt[g];
  Eigen::LDLT<Eigen::MatrixXd> vchol(out.V);
  const Eigen::MatrixXd vix = vchol.solve(d.X);
  const Eigen::VectorXd viy = vchol.solve(d.y);
  out.xtvx = d.X.transpose() * vix;
  Eigen::LDLT<Eigen::MatrixXd> xchol(out.xtvx);
  out.beta = xchol.solve(d.X.transpose() * viy);
  const Eigen::VectorXd r = d.y - d.X * out.beta;
  const double rvr = r.dot(vchol.solve(r));
  const double dof = static_cast<double>(n - p);
  out.sigma2 = rvr / dof;
  const double logdet_v = vchol.vectorD().array().log().sum();
  const double logdet_x = xchol.vectorD().array().log().sum();
  out.criterion = logdet_v + logdet_x + dof * (1.0 + std::log(2.0 * M_PI * out.sigma2));
  return out;
}

}  // namespace detail

/// response ~ 1 + parameters + budget with crossed random intercepts for
/// dataset and tokenizer family, by profile REML. Each variance ratio is
/// minimized in turn (bounded Brent search in log space plus the zero
/// boundary) until the criterion stops moving.
inline RegressionFit fit_mixed_model(const std::vector<RegressionRow>& rows, Response response,
                                     const FitOptions& options = {}) {
  std::set<std::string> models, datasets, families;
  for (const auto& r : rows) {
    models.insert(r.model);
    datasets.insert(r.dataset);
    families.insert(r.tokenizer_family);
  }
  if (models.size() < 3) throw Error(ErrorKind::validation, "mixed model needs at least 3 distinct models");
  if (datasets.size() < 2 || families.size() < 2) {
    throw Error(ErrorKind::validation, "each random effect needs at least 2 levels");
  }
  const auto d = detail::make_design(rows);
  const auto n = d.X.rows();

  RegressionFit fit;
  fit.response = response;
  fit.n_obs = rows.size();
  fit.theta.assign(2, 0.0);

  const auto ols = detail::profile(d, fit.theta);
  const double scale = 1.0 + d.y.squaredNorm();
  if (ols.sigma2 * static_cast<double>(n - 3) <= 1e-24 * scale) {
    fit.exact_fit = true;
    fit.converged = true;
  } else {
    double current = ols.criterion;
    for (fit.iterations = 1; fit.iterations <= options.max_iterations; ++fit.iterations) {
      const auto before = fit.theta;
      const double start = current;
      for (std::size_t g = 0; g < fit.theta.size(); ++g) {
        auto trial = fit.theta;
        auto eval = [&](double log_theta) {
          trial[g] = std::exp(log_theta);
          return detail::profile(d, trial).criterion;
        };
        const auto [best_log, best_val] = boost::math::tools::brent_find_minima(
            eval, std::log(1e-8), std::log(options.theta_max), 52);
        trial[g] = 0.0;
        const double at_zero = detail::profile(d, trial).criterion;
        double candidate = std::exp(best_log), value = best_val;
        // Ties within tolerance go to the boundary so a null component clamps cleanly.
        if (at_zero <= best_val + options.tolerance) {
          candidate = 0.0;
          value = at_zero;
        }
        if (value <= current) {
          fit.theta[g] = candidate;
          current = value;
        }
      }
      double moved = 0.0;
      for (std::size_t g = 0; g < fit.theta.size(); ++g) moved = std::max(moved, std::abs(fit.theta[g] - before[g]));
      if (start - current < options.tolerance && moved < 1e-6) {
        fit.converged = true;
        break;
      }
    }
    if (!fit.converged) {
      throw ConvergenceError("REML did not converge in " + std::to_string(options.max_iterations) +
                                 " iterations",
                             fit.theta, current);
    }
  }

  const auto prof = detail::profile(d, fit.theta);
  fit.reml_criterion = prof.criterion;
  fit.residual_variance = fit.exact_fit ? 0.0 : prof.sigma2;
  const Eigen::MatrixXd cov = prof.xtvx.inverse() * fit.residual_variance;
  const char* names[] = {"Intercept", "Parameters", "Training budget"};
  for (Eigen::Index j = 0; j < 3; ++j) {
    Coefficient c;
    c.term = names[j];
    c.estimate = prof.beta(j);
    c.se = std::sqrt(std::max(0.0, cov(j, j)));
    if (c.se > 0.0) {
      c.z = c.estimate / c.se;
      c.p = std::erfc(std::abs(c.z) / std::sqrt(2.0));
    } else {
      c.z = c.estimate == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), c.estimate);
      c.p = c.estimate == 0.0 ? 1.0 : 0.0;
    }
    c.stars = significance_stars(c.p);
    fit.coefficients.push_back(std::move(c));
  }
  const char* groups[] = {"dataset", "tokenizer family"};
  for (std::size_t g = 0; g < 2; ++g) {
    fit.random_effects.push_back({groups[g], d.levels[g],
                                  fit.theta[g] * fit.theta[g] * fit.residual_variance,
                                  fit.theta[g] == 0.0});
  }
  return fit;
}

struct ResidualPoint {
  std::string model;
  std::string dataset;
  double fitted = 0.0;
  double residual = 0.0;
};

/// Conditional fitted values (fixed part plus predicted random intercepts).
/// With an intercept in the model these residuals sum to zero.
inline std::vector<ResidualPoint> residual_diagnostics(const RegressionFit& fit,
                                                       const std::vector<RegressionRow>& rows) {
  if (!fit.converged) throw Error(ErrorKind::convergence, "residuals need a converged fit");
  const auto d = detail::make_design(rows);
  Eigen::Vector3d beta;
  for (Eigen::Index j = 0; j < 3; ++j) beta(j) = fit.coefficients[static_cast<std::size_t>(j)].estimate;
  const Eigen::VectorXd marginal = d.X * beta;
  const Eigen::VectorXd r = d.y - marginal;
  Eigen::MatrixXd V = Eigen::MatrixXd::Identity(d.X.rows(), d.X.rows());
  for (std::size_t g = 0; g < 2; ++g) V += fit.theta[g] * fit.theta[g] * d.ZZt[g];
  const Eigen::VectorXd vir = V.ldlt().solve(r);
  Eigen::VectorXd random_part = Eigen::VectorXd::Zero(d.X.rows());
  for (std::size_t g = 0; g < 2; ++g) {
    const Eigen::VectorXd b = fit.theta[g] * fit.theta[g] * (d.Z[g].transpose() * vir);
    random_part += d.Z[g] * b;
  }
  std::vector<ResidualPoint> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    const double fitted = marginal(k) + random_part(k);
    out.push_back({rows[i].model, rows[i].dataset, fitted, rows[i].response - fitted});
  }
  return out;
}

inline std::string residuals_csv(const std::vector<ResidualPoint>& points) {
  std::string out = util::csv_line({"model", "dataset", "fitted", "residual"});
  for (const auto& p : points) {
    out += util::csv_line({p.model, p.dataset, fmt::format("{:.6f}", p.fitted),
                           fmt::format("{:.6f}", p.residual)});
  }
  return out;
}

inline std::string format_estimate(double v) {
  if (v != 0.0 && std::abs(v) < 0.0005) return fmt::format("{:.1e}", v);
  return fmt::format("{:.3f}", v);
}

/// "0.744 (0.094) ***" style cell.
inline std::string format_cell(const Coefficient& c) {
  std::string cell = format_estimate(c.estimate) + " (" + format_estimate(c.se) + ")";
  if (!c.stars.empty()) cell += " " + c.stars;
  return cell;
}

/// Side-by-side coefficient table for several fits.
inline std::string regression_table_text(const std::vector<RegressionFit>& fits) {
  auto finish = [](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line + '\n';
  };
  std::string head = fmt::format("{:<18}", "");
  for (const auto& f : fits) head += fmt::format("{:<26}", to_string(f.response));
  std::string out = finish(head);
  for (std::size_t j = 0; j < 3; ++j) {
    std::string line = fmt::format("{:<18}", fits.empty() ? "" : fits[0].coefficients[j].term);
    for (const auto& f : fits) line += fmt::format("{:<26}", format_cell(f.coefficients[j]));
    out += finish(line);
  }
  out += "Note: *** p < 0.001, ** p < 0.01, * p < 0.05 (Wald z)\n";
  return out;
}

inline std::string regression_csv(const std::vector<RegressionFit>& fits) {
  std::string out = util::csv_line({"response", "term", "estimate", "se", "z", "p", "stars"});
  for (const auto& f : fits) {
    for (const auto& c : f.coefficients) {
      out += util::csv_line({std::string(to_string(f.response)), c.term, fmt::format("{:.6g}", c.estimate),
                             fmt::format("{:.6g}", c.se), fmt::format("{:.6g}", c.z),
                             fmt::format("{:.6g}", c.p), c.stars});
    }
    for (const auto& v : f.random_effects) {
      out += util::csv_line({std::string(to_string(f.response)), "var(" + v.group + ")",
                             fmt::format("{:.6g}", v.variance), "", "", "", v.clamped ? "clamped" : ""});
    }
    out += util::csv_line({std::string(to_string(f.response)), "var(residual)",
                           fmt::format("{:.6g}", f.residual_variance), "", "", "", ""});
  }
  return out;
}

}  // namespace leakaudit::analysis
