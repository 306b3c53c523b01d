#include "seqlab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "seqlab/coder.hpp"
#include "seqlab/error.hpp"
#include "seqlab/generators.hpp"
#include "seqlab/measures.hpp"
#include "seqlab/selection.hpp"
#include "seqlab/stats.hpp"

namespace seqlab {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double parse_real(const std::string& text, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("expected a number for '" + key + "', got '" + text + "'");
}

double real_or(const KeyValueRecord& r, const std::string& key, double fallback) {
  return r.contains(key) ? parse_real(r.get(key), key) : fallback;
}

KeyValueRecord source_record(const KeyValueRecord& r, const std::string& prefix,
                             const std::string& default_kind) {
  KeyValueRecord d = r.scoped(prefix);
  if (d.empty()) d.set("kind", default_kind);
  return d;
}

std::size_t default_horizon(const std::string& id) {
  if (id == "kw-demo" || id == "rates") return 1000000;
  return 100000;
}

double binary_entropy(double p) {
  if (p <= 0 || p >= 1) return 0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

void add_check(ExperimentReport& report, std::string name, bool pass, std::string value,
               std::string bound) {
  report.checks.push_back({std::move(name), pass, std::move(value), std::move(bound)});
}

std::string stat_csv(const std::vector<StatCurve>& curves) {
  std::string out = kStatCsvHeader;
  for (const auto& c : curves) out += to_csv_rows(c);
  return out;
}

// Length contract checks shared by the coding experiments.
void check_code_lengths(ExperimentReport& report, const CodeLengthCurve& curve) {
  long worst = 0;
  for (const auto& pt : curve.points) {
    const long gap = std::labs(static_cast<long>(pt.emitted_plus_pending()) - pt.ideal);
    worst = std::max(worst, gap);
  }
  add_check(report, "length_contract", worst <= kCodeLengthSlack, std::to_string(worst),
            std::to_string(kCodeLengthSlack));
}

ExperimentReport run_kw_demo(const ExperimentManifest& m) {
  const KeyValueRecord& r = m.record;
  const SourcePtr xs = make_source(source_record(r, "x", "champernowne"));
  const SourcePtr ys = make_source(source_record(r, "y", "fibonacci"));
  const unsigned k_max = static_cast<unsigned>(r.get_uint_or("k_max", 3));
  const double factor = real_or(r, "factor", 2.0);

  std::vector<StatCurve> curves;
  auto curve_for = [&](const std::string& label, unsigned k) -> StatCurve& {
    for (auto& c : curves) {
      if (c.label == label && c.k == k) return c;
    }
    curves.push_back({label, k, {}});
    return curves.back();
  };
  StatCurve density_curve{"density_y", 0, {}};

  const BitString x_full = xs->prefix(m.n);
  const BitString y_full = ys->prefix(m.n);
  std::vector<double> last_xy(k_max + 1), last_xprime(k_max + 1), last_xx(k_max + 1, -1);
  for (std::size_t n : m.checkpoints) {
    const BitString x = x_full.prefix(n);
    const BitString y = y_full.prefix(n);
    const BitString xy = select(x, y).selected;
    const BitString xprime = x.prefix(xy.size());
    const BitString xx = select(x, x).selected;
    density_curve.points.emplace_back(n, density(y).get_d());
    for (unsigned k = 1; k <= k_max; ++k) {
      if (x.size() >= k) curve_for("discrepancy_x", k).points.emplace_back(n, discrepancy(x, k));
      if (xy.size() >= k) {
        last_xy[k] = discrepancy(xy, k);
        last_xprime[k] = discrepancy(xprime, k);
        curve_for("discrepancy_x_sel_y", k).points.emplace_back(n, last_xy[k]);
        curve_for("discrepancy_x_prefix", k).points.emplace_back(n, last_xprime[k]);
      }
      if (xx.size() >= k) {
        last_xx[k] = discrepancy(xx, k);
        curve_for("discrepancy_x_sel_x", k).points.emplace_back(n, last_xx[k]);
      }
    }
  }
  curves.push_back(density_curve);

  ExperimentReport report;
  report.files["discrepancy.csv"] = stat_csv(curves);
  const double y_density = density(y_full).get_d();
  add_check(report, "selector_density_positive", y_density > 0, fmt(y_density), "0");
  for (unsigned k = 1; k <= k_max; ++k) {
    const double bound = factor * last_xprime[k];
    add_check(report, "selected_discrepancy_k" + std::to_string(k), last_xy[k] <= bound,
              fmt(last_xy[k]), fmt(bound));
  }
  add_check(report, "self_selection_discrepancy_k1", last_xx[1] == 0.5, fmt(last_xx[1]), "0.5");
  return report;
}

ExperimentReport run_prop1_demo(const ExperimentManifest& m) {
  const KeyValueRecord& r = m.record;
  const KeyValueRecord y_desc = source_record(r, "y", "fibonacci");
  const SourcePtr ys = make_source(y_desc);
  KeyValueRecord measure_desc = r.scoped("measure");
  if (measure_desc.empty()) {
    measure_desc.set("family", "pointmass");
    measure_desc.merge_scoped("source", y_desc);
  }
  const MeasurePtr measure = make_measure(measure_desc);
  const BitString y = ys->prefix(m.n);

  const CodeLengthCurve curve = code_length_curve(*measure, y, m.checkpoints);
  ExperimentReport report;
  report.files["code_length.csv"] = to_csv(curve);
  check_code_lengths(report, curve);

  if (measure_desc.get("family") == "pointmass") {
    std::size_t longest = 0;
    for (const auto& pt : curve.points) longest = std::max(longest, pt.emitted_plus_pending());
    add_check(report, "computable_selector_code_bounded",
              static_cast<long>(longest) <= kCodeLengthSlack, std::to_string(longest),
              std::to_string(kCodeLengthSlack));
  }
  const BitString z = encode(*measure, y).terminated;
  const bool round_trip = decode(*measure, z, y.size()) == y;
  add_check(report, "round_trip", round_trip, std::to_string(z.size()), std::to_string(y.size()));
  return report;
}

ExperimentReport run_prop2_demo(const ExperimentManifest& m) {
  const KeyValueRecord& r = m.record;
  KeyValueRecord y_desc = r.scoped("y");
  if (y_desc.empty()) y_desc.set("kind", "bernoulli").set("p", "1/3").set("seed", "1");
  KeyValueRecord measure_desc = r.scoped("measure");
  if (measure_desc.empty()) measure_desc.set("family", "bernoulli").set("p", "1/3");
  const MeasurePtr measure = make_measure(measure_desc);
  const BitString y = make_source(y_desc)->prefix(m.n);

  const CodeLengthCurve curve = code_length_curve(*measure, y, m.checkpoints);
  const BitString z = encode(*measure, y).terminated;

  StatCurve rate{"code_rate", 0, {}};
  StatCurve entropy_y{"entropy_y", 1, {}};
  StatCurve entropy_z{"entropy_code", 1, {}};
  for (const auto& pt : curve.points) {
    rate.points.emplace_back(pt.n, static_cast<double>(pt.emitted) / static_cast<double>(pt.n));
    entropy_y.points.emplace_back(pt.n, empirical_entropy(y.prefix(pt.n), 1));
    if (pt.emitted >= 1) entropy_z.points.emplace_back(pt.n, empirical_entropy(z.prefix(pt.emitted), 1));
  }

  ExperimentReport report;
  report.files["code_length.csv"] = to_csv(curve);
  report.files["stats.csv"] = stat_csv({rate, entropy_y, entropy_z});
  check_code_lengths(report, curve);

  const std::string& family = measure_desc.get("family");
  std::optional<double> target;
  if (r.contains("rate_target")) {
    target = parse_real(r.get("rate_target"), "rate_target");
  } else if (family == "uniform") {
    target = 1.0;
  } else if (family == "bernoulli") {
    target = binary_entropy(parse_rational(measure_desc.get("p")).get_d());
  }
  if (target) {
    const double tol = real_or(r, "rate_tolerance", 0.02);
    const double observed = static_cast<double>(curve.points.back().emitted) / static_cast<double>(m.n);
    add_check(report, "code_rate", std::fabs(observed - *target) <= tol, fmt(observed),
              fmt(*target - tol) + ".." + fmt(*target + tol));
  }

  const long gap_bound = ceil_neg_log2(min_conditional(*measure, y)) + 2;
  add_check(report, "bounded_gaps", static_cast<long>(curve.max_step) <= gap_bound,
            std::to_string(curve.max_step), std::to_string(gap_bound));

  const double min_entropy = real_or(r, "min_code_entropy", 0.99);
  const double hz = empirical_entropy(z, 1);
  add_check(report, "code_entropy_k1", hz >= min_entropy, fmt(hz), fmt(min_entropy));

  const bool round_trip = decode(*measure, z, y.size()) == y;
  add_check(report, "round_trip", round_trip, std::to_string(z.size()), std::to_string(y.size()));
  return report;
}

ExperimentReport run_rates(const ExperimentManifest& m) {
  const KeyValueRecord& r = m.record;
  const KeyValueRecord x_desc = source_record(r, "x", "champernowne");
  const BitString x = make_source(x_desc)->prefix(m.n);
  const unsigned k_max = static_cast<unsigned>(r.get_uint_or("k_max", 8));

  std::vector<StatCurve> curves;
  auto sequence_curves = [&](const BitString& s, const std::string& tag) {
    std::vector<StatCurve> local;
    for (unsigned k = 1; k <= k_max; ++k) {
      local.push_back({"entropy_" + tag, k, {}});
      local.push_back({"discrepancy_" + tag, k, {}});
      local.push_back({"factor_complexity_" + tag, k, {}});
    }
    StatCurve lz{"lz78_ratio_" + tag, 0, {}};
    for (std::size_t n : m.checkpoints) {
      const BitString p = s.prefix(n);
      std::size_t slot = 0;
      for (unsigned k = 1; k <= k_max; ++k) {
        if (p.size() < k) {
          slot += 3;
          continue;
        }
        const BlockDistribution d = block_freqs(p, k);
        local[slot++].points.emplace_back(n, std::min(1.0, entropy_of(d) / k));
        local[slot++].points.emplace_back(n, discrepancy(p, k));
        local[slot++].points.emplace_back(n, static_cast<double>(factor_complexity(p, k)));
      }
      lz.points.emplace_back(n, lz78_ratio(p).ratio);
    }
    local.push_back(lz);
    curves.insert(curves.end(), local.begin(), local.end());
    return lz.points.back().second;
  };

  ExperimentReport report;
  const double lz_x = sequence_curves(x, "x");
  if (r.contains("entropy_min")) {
    const double floor_value = parse_real(r.get("entropy_min"), "entropy_min");
    const double h = empirical_entropy(x, k_max);
    add_check(report, "entropy_k" + std::to_string(k_max), h >= floor_value, fmt(h), fmt(floor_value));
  }
  if (!r.scoped("y").empty()) {
    const BitString y = make_source(r.scoped("y"))->prefix(m.n);
    const double lz_y = sequence_curves(y, "y");
    if (r.contains("lz78_factor")) {
      const double factor = parse_real(r.get("lz78_factor"), "lz78_factor");
      add_check(report, "lz78_separation", lz_x >= factor * lz_y, fmt(lz_x), fmt(factor * lz_y));
    }
  }
  report.files["stats.csv"] = stat_csv(curves);

  const KeyValueRecord measure_desc = r.scoped("measure");
  if (!measure_desc.empty()) {
    const MeasurePtr measure = make_measure(measure_desc);
    const CodeLengthCurve curve = code_length_curve(*measure, x, m.checkpoints);
    report.files["code_length.csv"] = to_csv(curve);
    check_code_lengths(report, curve);
    if (measure_desc.get("family") == "pointmass") {
      std::size_t longest = 0;
      for (const auto& pt : curve.points) longest = std::max(longest, pt.emitted_plus_pending());
      add_check(report, "computable_code_bounded", static_cast<long>(longest) <= kCodeLengthSlack,
                std::to_string(longest), std::to_string(kCodeLengthSlack));
    }
  }
  return report;
}

}  // namespace

ExperimentManifest ExperimentManifest::from_record(const KeyValueRecord& record) {
  ExperimentManifest m;
  m.record = record;
  m.id = record.get("experiment");
  if (m.id != "kw-demo" && m.id != "prop1-demo" && m.id != "prop2-demo" && m.id != "rates") {
    throw UsageError("unknown experiment '" + m.id + "' (kw-demo|prop1-demo|prop2-demo|rates)");
  }
  m.n = record.get_uint_or("n", default_horizon(m.id));
  if (m.n == 0) throw UsageError("n must be positive");
  if (record.contains("checkpoints")) {
    const auto raw = parse_uint_list(record.get("checkpoints"), "checkpoints");
    m.checkpoints.assign(raw.begin(), raw.end());
    if (m.checkpoints.empty() || m.checkpoints.back() != m.n) m.checkpoints.push_back(m.n);
  } else {
    m.checkpoints = default_checkpoints(m.n);
  }
  for (std::size_t j = 0; j < m.checkpoints.size(); ++j) {
    if (m.checkpoints[j] == 0 || m.checkpoints[j] > m.n ||
        (j > 0 && m.checkpoints[j] <= m.checkpoints[j - 1])) {
      throw UsageError("checkpoints must be strictly increasing values in [1, n]");
    }
  }
  m.output_dir = record.get_or("out", "");
  return m;
}

bool ExperimentReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string ExperimentReport::summary() const {
  std::string out;
  for (const auto& c : checks) {
    out += "CHECK " + c.name + (c.pass ? " PASS " : " FAIL ") + c.value + " " + c.bound + "\n";
  }
  return out;
}

ExperimentReport run_experiment(const ExperimentManifest& manifest) {
  ExperimentReport report;
  if (manifest.id == "kw-demo") {
    report = run_kw_demo(manifest);
  } else if (manifest.id == "prop1-demo") {
    report = run_prop1_demo(manifest);
  } else if (manifest.id == "prop2-demo") {
    report = run_prop2_demo(manifest);
  } else {
    report = run_rates(manifest);
  }
  report.files["manifest.txt"] = manifest.record.to_text();
  return report;
}

void write_report(const ExperimentReport& report, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& contents) {
    const std::string path = (std::filesystem::path(dir) / name).string();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
  };
  for (const auto& [name, contents] : report.files) write(name, contents);
  write("summary.txt", report.summary());
}

}  // namespace seqlab
