// seqlab: generate sequences, select subsequences, compute statistics, run
// the arithmetic coder, and execute experiment manifests.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "seqlab/bitstring.hpp"
#include "seqlab/coder.hpp"
#include "seqlab/error.hpp"
#include "seqlab/experiment.hpp"
#include "seqlab/generators.hpp"
#include "seqlab/measures.hpp"
#include "seqlab/selection.hpp"
#include "seqlab/stats.hpp"

namespace {

using namespace seqlab;

struct Options {
  std::string in, in2, out, measure, manifest, descriptor, kind, curve;
  std::string format = "text";
  std::vector<std::string> params;
  std::size_t n = 0;
  unsigned k = 1;
  bool blocks = false;
};

void write_text(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

void write_bits(const std::string& path, const BitString& bits, SequenceFormat format) {
  if (path.empty() || path == "-") {
    if (format == SequenceFormat::kPacked) {
      bits.write_packed(std::cout);
    } else {
      std::cout << bits << '\n';
    }
    return;
  }
  write_sequence_file(path, bits, format);
}

int cmd_generate(const Options& o) {
  KeyValueRecord d;
  if (!o.descriptor.empty()) d = KeyValueRecord::read_file(o.descriptor);
  if (!o.kind.empty()) d.set("kind", o.kind);
  for (const auto& p : o.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects key=value, got '" + p + "'");
    d.set(p.substr(0, eq), p.substr(eq + 1));
  }
  const SourcePtr src = make_source(d);
  write_bits(o.out, src->prefix(o.n), parse_format(o.format));
  return 0;
}

int cmd_select(const Options& o) {
  const auto fmt = parse_format(o.format);
  const BitString x = read_sequence_file(o.in, fmt);
  const BitString y = read_sequence_file(o.in2, fmt);
  const SelectionResult r = select(x, y);
  write_bits(o.out, r.selected, fmt);
  if (!o.out.empty() && o.out != "-") {
    std::string positions;
    for (std::size_t p : r.positions) positions += std::to_string(p) + "\n";
    write_text(o.out + ".positions", positions);
  }
  return 0;
}

int cmd_stats(const Options& o) {
  BitString x = read_sequence_file(o.in, parse_format(o.format));
  if (o.n > 0) x = x.prefix(o.n);
  std::string csv;
  if (o.blocks) {
    const BlockDistribution d = block_freqs(x, o.k);
    csv = "pattern,count\n";
    for (std::uint64_t v = 0; v < d.counts.size(); ++v) {
      csv += d.pattern_text(v) + "," + std::to_string(d.counts[v]) + "\n";
    }
  } else {
    const std::size_t n = x.size();
    csv = kStatCsvHeader;
    csv += to_csv_rows({"entropy", o.k, {{n, empirical_entropy(x, o.k)}}});
    csv += to_csv_rows({"discrepancy", o.k, {{n, discrepancy(x, o.k)}}});
    csv += to_csv_rows(
        {"factor_complexity", o.k, {{n, static_cast<double>(factor_complexity(x, o.k))}}});
    csv += to_csv_rows({"lz78_ratio", 0, {{n, lz78_ratio(x).ratio}}});
    csv += to_csv_rows({"density", 0, {{n, density(x).get_d()}}});
  }
  write_text(o.out, csv);
  return 0;
}

int cmd_encode(const Options& o) {
  const auto fmt = parse_format(o.format);
  BitString y = read_sequence_file(o.in, fmt);
  if (o.n > 0) y = y.prefix(o.n);
  const MeasurePtr measure = make_measure(KeyValueRecord::read_file(o.measure));
  const CodeStream stream = encode(*measure, y);
  write_bits(o.out, stream.terminated, fmt);
  if (!o.curve.empty()) {
    write_text(o.curve, to_csv(code_length_curve(*measure, y, default_checkpoints(y.size()))));
  }
  return 0;
}

int cmd_decode(const Options& o) {
  const auto fmt = parse_format(o.format);
  const BitString z = read_sequence_file(o.in, fmt);
  const MeasurePtr measure = make_measure(KeyValueRecord::read_file(o.measure));
  write_bits(o.out, decode(*measure, z, o.n), fmt);
  return 0;
}

int cmd_experiment(const Options& o) {
  ExperimentManifest m = ExperimentManifest::from_record(KeyValueRecord::read_file(o.manifest));
  if (!o.out.empty()) m.output_dir = o.out;
  if (m.output_dir.empty()) throw UsageError("experiment: no output directory (--out or out = ...)");
  const ExperimentReport report = run_experiment(m);
  write_report(report, m.output_dir);
  std::cout << report.summary();
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seqlab: subsequence selection and randomness diagnostics for binary sequences"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "Write a prefix of a generated sequence");
  gen->add_option("--kind", o.kind, "champernowne|fibonacci|sturmian|periodic|bernoulli|constant");
  gen->add_option("--param", o.params, "Generator parameter key=value (repeatable)");
  gen->add_option("--descriptor", o.descriptor, "Generator descriptor file");
  gen->add_option("--n", o.n, "Number of bits")->required();

  auto* sel = app.add_subcommand("select", "Write x/y and a .positions sidecar");
  sel->add_option("--in", o.in, "Sequence x")->required();
  sel->add_option("--in2", o.in2, "Selector y")->required();

  auto* st = app.add_subcommand("stats", "Block statistics of a sequence as CSV");
  st->add_option("--in", o.in, "Sequence file")->required();
  st->add_option("--k", o.k, "Block length");
  st->add_option("--n", o.n, "Use only the first n bits");
  st->add_flag("--blocks", o.blocks, "Dump the k-block distribution as pattern,count rows");

  auto* enc = app.add_subcommand("encode", "Arithmetic-code a sequence under a measure");
  enc->add_option("--in", o.in, "Sequence file")->required();
  enc->add_option("--measure", o.measure, "Measure descriptor file")->required();
  enc->add_option("--n", o.n, "Encode only the first n bits");
  enc->add_option("--curve", o.curve, "Also write the code length curve CSV here");

  auto* dec = app.add_subcommand("decode", "Decode a code under a measure");
  dec->add_option("--in", o.in, "Code file")->required();
  dec->add_option("--measure", o.measure, "Measure descriptor file")->required();
  dec->add_option("--n", o.n, "Maximum number of output bits")->required();

  auto* exp = app.add_subcommand("experiment", "Run an experiment manifest");
  exp->add_option("--manifest", o.manifest, "Manifest file")->required();

  for (auto* sub : {gen, sel, st, enc, dec, exp}) {
    sub->add_option("--out", o.out, "Output file or directory (default stdout)");
    if (sub != exp) {
      sub->add_option("--format", o.format, "Sequence file format")
          ->check(CLI::IsMember({"text", "packed"}));
    }
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(o);
    if (sel->parsed()) return cmd_select(o);
    if (st->parsed()) return cmd_stats(o);
    if (enc->parsed()) return cmd_encode(o);
    if (dec->parsed()) return cmd_decode(o);
    return cmd_experiment(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
