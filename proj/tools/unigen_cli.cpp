#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "unigen/families.hpp"
#include "unigen/io.hpp"
#include "unigen/tsequence.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInvalidAlgebra = 3;
constexpr int kExitInternal = 4;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw unigen::invalid_input("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw unigen::invalid_input("cannot open output file: " + path);
  out << text;
}

unigen::LieAlgebraRep make_family(const std::string& family, int n) {
  if (family == "gn") return unigen::family_gn(n);
  if (family == "hn") return unigen::family_hn(n);
  throw unigen::invalid_input("unknown family: " + family);
}

unigen::ResultFile run_problem(const unigen::ProblemFile& p) {
  using clock = std::chrono::steady_clock;
  unigen::ResultFile r;
  r.dimension = p.dimension;

  auto t0 = clock::now();
  unigen::RepDiagnostics diag = unigen::check_rep(p.rep);
  if (!diag.valid()) {
    std::string msg = "invalid Lie algebra:";
    for (const auto& s : diag.issues) msg += "\n  " + s;
    throw unigen::invalid_input(msg);
  }
  r.timing.check = seconds_since(t0);

  t0 = clock::now();
  unigen::Flag flag;
  if (p.flag) {
    flag = unigen::Flag{p.dimension, *p.flag};
  } else {
    flag = unigen::compute_flag(p.rep);
  }
  r.timing.flag = seconds_since(t0);

  unigen::Lattice L = p.lattice ? unigen::make_lattice(*p.lattice)
                                : unigen::Lattice::standard(p.dimension);

  t0 = clock::now();
  unigen::TSequenceResult ts =
      unigen::compute_generators(L, p.rep, flag, p.options.support_optimization);
  r.timing.generators = seconds_since(t0);

  r.generators = ts.generators;
  r.hirsch_length = ts.hirsch_length();
  r.levels = ts.level_sizes();

  if (p.options.verify) {
    t0 = clock::now();
    r.verification = unigen::verify(ts);
    r.timing.verify = seconds_since(t0);
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generators of the arithmetic subgroup G_L of a unipotent group"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "compute a T-sequence for a problem file");
  std::string run_input, run_output;
  bool no_support_opt = false, do_verify = false;
  run->add_option("file", run_input, "problem file (JSON)")->required();
  run->add_flag("--no-support-opt", no_support_opt, "disable the support-subspace optimization");
  run->add_flag("--verify", do_verify, "verify the output");
  run->add_option("-o,--output", run_output, "result file (default: stdout)");

  // verify
  auto* ver = app.add_subcommand("verify", "re-check a result file against its problem file");
  std::string ver_problem, ver_result;
  ver->add_option("problem", ver_problem, "problem file")->required();
  ver->add_option("result", ver_result, "result file")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "emit a test-family problem file");
  std::string gen_family, gen_output;
  int gen_n = 0;
  gen->add_option("--family", gen_family, "gn or hn")->required();
  gen->add_option("--n", gen_n, "family index")->required();
  gen->add_option("-o,--output", gen_output, "output file (default: stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "run a family range and report timings");
  std::string bench_family;
  int bench_from = 0, bench_to = -1;
  bool bench_no_support = false;
  bench->add_option("--family", bench_family, "gn or hn")->required();
  bench->add_option("--from", bench_from, "first n")->required();
  bench->add_option("--to", bench_to, "last n")->required();
  bench->add_flag("--no-support-opt", bench_no_support);

  // example
  auto* exa = app.add_subcommand("example", "emit the builtin 4-dimensional fixture");
  std::string exa_output;
  exa->add_option("-o,--output", exa_output, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;  // --help exits 0, usage errors exit 2
  }

  try {
    if (*run) {
      unigen::ProblemFile p;
      try {
        p = unigen::parse_problem(read_file(run_input));
      } catch (const unigen::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
      }
      if (no_support_opt) p.options.support_optimization = false;
      if (do_verify) p.options.verify = true;
      unigen::ResultFile r = run_problem(p);
      write_output(run_output, unigen::serialize_result(r));
      if (r.verification && !r.verification->all_ok()) {
        std::cerr << "error: verification failed\n";
        return kExitInternal;
      }
      return 0;
    }
    if (*ver) {
      unigen::ProblemFile p;
      unigen::ResultFile r;
      try {
        p = unigen::parse_problem(read_file(ver_problem));
        r = unigen::parse_result(read_file(ver_result));
      } catch (const unigen::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
      }
      unigen::Lattice L = p.lattice ? unigen::make_lattice(*p.lattice)
                                    : unigen::Lattice::standard(p.dimension);
      unigen::VerifyReport rep = unigen::verify_generators(r.generators, L, p.rep);
      std::cout << "preserves_lattice: " << (rep.preserves_lattice ? "ok" : "FAIL") << "\n"
                << "count:             " << (rep.count_ok ? "ok" : "FAIL") << "\n"
                << "log_span:          " << (rep.log_span_ok ? "ok" : "FAIL") << "\n";
      for (const auto& s : rep.issues) std::cout << "  issue: " << s << "\n";
      return rep.preserves_lattice && rep.count_ok && rep.log_span_ok ? 0 : kExitInternal;
    }
    if (*gen) {
      unigen::ProblemFile p;
      p.rep = make_family(gen_family, gen_n);
      p.dimension = p.rep.dim_V;
      write_output(gen_output, unigen::serialize_problem(p));
      return 0;
    }
    if (*bench) {
      if (bench_to < bench_from) return 0;  // empty range, empty table
      std::cout << "n\ttime(s)\thirsch\n";
      for (int n = bench_from; n <= bench_to; ++n) {
        unigen::LieAlgebraRep g = make_family(bench_family, n);
        auto t0 = std::chrono::steady_clock::now();
        unigen::TSequenceResult ts = unigen::compute_generators(g, !bench_no_support);
        double secs = seconds_since(t0);
        std::printf("%d\t%.2f\t%d\n", n, secs, ts.hirsch_length());
        std::fflush(stdout);
      }
      return 0;
    }
    if (*exa) {
      write_output(exa_output, unigen::serialize_problem(unigen::builtin_example()));
      return 0;
    }
  } catch (const unigen::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidAlgebra;
  } catch (const unigen::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
