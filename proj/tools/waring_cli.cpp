#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "waring/check.hpp"
#include "waring/errors.hpp"
#include "waring/instance_gen.hpp"
#include "waring/io.hpp"
#include "waring/octic14.hpp"

namespace {

using namespace waring;

constexpr int kExitInput = 2;
constexpr int kExitExhausted = 3;

int fail_input(const std::exception& e) {
  std::cerr << "error: " << e.what() << '\n';
  return kExitInput;
}

int cmd_check(const std::string& path, const std::string& mode, const std::string& criteria,
              const std::string& report_path, unsigned jobs, std::uint64_t seed, bool timings) {
  std::string bytes;
  std::optional<Instance> inst;
  try {
    bytes = io::read_file(path);
    inst = io::parse_instance(bytes).to_instance();
  } catch (const Error& e) {
    return fail_input(e);
  }
  CheckOptions opt;
  opt.criteria = *criterion_set_from_string(criteria);
  opt.mode = mode == "paper13" ? octic14::SystemMode::Paper13 : octic14::SystemMode::Full;
  opt.jobs = jobs;
  opt.seed = seed;
  CheckResult res = run_check(*inst, opt);

  for (const auto& c : res.certificates) {
    std::cout << c.criterion << ": " << c.verdict_string() << '\n';
    for (const auto& e : c.evidence) std::cout << "  " << e.label << " = " << e.value << '\n';
  }
  std::cout << "verdict: " << res.overall.verdict_string() << '\n';

  if (!report_path.empty()) {
    io::ReportFile rep{inst->context().prime(), io::sha256_hex(bytes), mode, criteria, std::move(res)};
    std::string text = io::render_report(rep, timings);
    if (report_path == "-")
      std::cout << text;
    else
      io::write_file(report_path, text);
    return rep.result.exit_code();
  }
  return res.exit_code();
}

int cmd_gen(const std::string& kind, std::uint64_t seed, std::optional<std::uint64_t> prime, std::size_t budget,
            bool small_field, const std::string& out) {
  gen::GeneratorConfig cfg;
  try {
    cfg.prime = prime ? *prime : io::default_prime();
    PrimeContext check(cfg.prime);
  } catch (const Error& e) {
    return fail_input(e);
  }
  cfg.attempt_budget = budget;
  if (small_field) {
    cfg.require_kruskal = false;
    cfg.rational_residual = kind == "unidentifiable";
  }
  try {
    auto g = kind == "identifiable" ? gen::gen_identifiable(seed, cfg) : gen::gen_unidentifiable(seed, cfg);
    const std::string text = io::serialize_instance(io::InstanceFile::from_generated(g));
    if (out.empty() || out == "-")
      std::cout << text;
    else
      io::write_file(out, text);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::GenerationExhausted ? kExitExhausted : kExitInput;
  }
  return 0;
}

int cmd_hilbert(const std::string& path, std::size_t max_degree) {
  try {
    Instance inst = io::load_instance(path).to_instance();
    std::cout << io::format_hilbert_table(hilbert_profile(inst.points, max_degree));
  } catch (const Error& e) {
    return fail_input(e);
  }
  return 0;
}

int cmd_kruskal(const std::string& path, std::size_t d, unsigned jobs) {
  try {
    Instance inst = io::load_instance(path).to_instance();
    KruskalResult k = kruskal_rank(inst.points, d, jobs);
    std::cout << "k_" << d << " = " << k.k << '\n' << "subsets examined: " << k.subsets_examined << '\n';
  } catch (const Error& e) {
    return fail_input(e);
  }
  return 0;
}

int cmd_syzygy(const std::string& path, const std::string& mode, std::uint64_t seed) {
  std::optional<Instance> inst;
  try {
    inst = io::load_instance(path).to_instance();
  } catch (const Error& e) {
    return fail_input(e);
  }
  try {
    auto hb = octic14::hilbert_burch(inst->points);
    std::cout << "Q = " << io::format_poly(hb.quartic) << '\n';
    for (std::size_t j = 0; j < hb.quintics.size(); ++j)
      std::cout << "Q" << j + 1 << " = " << io::format_poly(hb.quintics[j]) << '\n';
    std::cout << "\nM (5 x 4):\n";
    for (std::size_t r = 0; r < hb.matrix.size(); ++r)
      for (std::size_t c = 0; c < hb.matrix[r].size(); ++c)
        std::cout << "  M[" << r << "][" << c << "] = " << io::format_poly(hb.matrix[r][c]) << '\n';
    auto norm = octic14::normalization_check(hb);
    std::cout << "\nC (rank " << norm.rank << "):\n" << io::format_matrix(norm.matrix);
    auto fam = octic14::residual_family(hb);
    auto rep = octic14::second_decomposition_system(
        *inst, fam, mode == "paper13" ? octic14::SystemMode::Paper13 : octic14::SystemMode::Full, seed);
    std::cout << "\nsystem (" << rep.system_matrix.rows() << " x " << rep.system_matrix.cols() << ", rank "
              << rep.system_rank << "):\n"
              << io::format_matrix(rep.system_matrix);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identifiability certificates for plane Waring decompositions over prime fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(io::kToolVersion));

  std::string path, mode = "full", criteria = "all", report, kind, out;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> prime;
  std::size_t budget = 1000, max_degree = 10, kd = 3;
  bool no_timings = false, small_field = false;

  auto* check = app.add_subcommand("check", "Run identifiability criteria on an instance file");
  check->add_option("path", path, "Instance file")->required();
  check->add_option("--mode", mode, "Parameter system layout")->check(CLI::IsMember({"full", "paper13"}));
  check->add_option("--criteria", criteria, "Criteria to run")
      ->check(CLI::IsMember({"all", "range", "ranger", "mo", "kruskal", "octic14"}));
  check->add_option("--report", report, "Write a JSON report to this path ('-' for stdout)");
  check->add_option("--jobs", jobs, "Worker threads for subset sweeps")->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "Seed for the paper13 column selection");
  check->add_flag("--no-timings", no_timings, "Omit timings from the report");

  auto* gen = app.add_subcommand("gen", "Generate a ground-truth instance");
  gen->add_option("kind", kind, "identifiable or unidentifiable")
      ->required()
      ->check(CLI::IsMember({"identifiable", "unidentifiable"}));
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--prime", prime, "Field characteristic (default: WARING_PRIME or 31991)");
  gen->add_option("--budget", budget, "Resampling budget");
  gen->add_flag("--small-field", small_field,
                "Skip the k_3 gate and force a fully rational second decomposition (small primes only)");
  gen->add_option("-o,--output", out, "Output path (default stdout)");

  auto* hil = app.add_subcommand("hilbert", "Print the Hilbert function table of the point set");
  hil->add_option("path", path, "Instance file")->required();
  hil->add_option("--max-degree", max_degree, "Largest degree j");

  auto* kru = app.add_subcommand("kruskal", "Print the Kruskal rank of the point set");
  kru->add_option("path", path, "Instance file")->required();
  kru->add_option("--d", kd, "Veronese degree");
  kru->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* syz = app.add_subcommand("syzygy", "Dump the Hilbert-Burch matrix, C and the parameter system");
  syz->add_option("path", path, "Instance file")->required();
  syz->add_option("--mode", mode, "Parameter system layout")->check(CLI::IsMember({"full", "paper13"}));
  syz->add_option("--seed", seed, "Seed for the paper13 column selection");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  if (*check) return cmd_check(path, mode, criteria, report, jobs, seed, !no_timings);
  if (*gen) return cmd_gen(kind, seed, prime, budget, small_field, out);
  if (*hil) return cmd_hilbert(path, max_degree);
  if (*kru) return cmd_kruskal(path, kd, jobs);
  return cmd_syzygy(path, mode, seed);
}
