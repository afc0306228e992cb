#include "qnf/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qnf/bounds.hpp"
#include "qnf/errors.hpp"
#include "qnf/harness.hpp"
#include "qnf/matrix_io.hpp"
#include "qnf/normal_form.hpp"
#include "qnf/rewrite.hpp"
#include "qnf/synthesis.hpp"

namespace qnf {

namespace {

struct Flags {
  unsigned p = 0;
  std::string word;
  std::string file;
  std::string output;
  std::string epsilon;
  std::string gamma = "theorem";
  std::size_t hmax = 8;
  std::size_t trials = 0;
  std::size_t hcount = 0;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  bool exhaustive = false;
  bool inject_fault = false;
  bool time = false;
};

std::string summary(const NormalForm& nf) {
  return "tcount=" + std::to_string(nf_t_count(nf)) + " hcount=" + std::to_string(h_count(nf)) +
         " lde=" + std::to_string(lde_matrix(nf_to_matrix(nf)));
}

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open " + path);
  buf << f.rdbuf();
  return buf.str();
}

int cmd_normalize(const Flags& f, std::ostream& out) {
  const NormalForm nf = normalize(parse(f.word, f.p));
  out << print(nf_to_word(nf)) << '\n' << summary(nf) << '\n';
  return kExitOk;
}

int cmd_synth(const Flags& f, std::ostream& out, std::ostream& err, std::istream& in) {
  const MatrixFile file = read_matrix_file(slurp(f.file, in));
  if (f.p != 0 && f.p != file.p) {
    err << "error: -p " << f.p << " does not match the file's p = " << file.p << '\n';
    return kExitUsage;
  }
  for (const auto& w : file.warnings) err << "warning: " << w << '\n';
  const SynthReport r = exact_synthesize(file.p, file.entries);
  if (!r.ok()) {
    err << to_string(*r.failure) << ": " << r.message << '\n';
    return kExitSemantic;
  }
  out << print(nf_to_word(*r.result)) << '\n' << summary(*r.result) << " backtracks=" << r.backtracks << '\n';
  return kExitOk;
}

int cmd_matrix(const Flags& f, std::ostream& out) {
  const std::string text = write_matrix_file(word_to_matrix(parse(f.word, f.p)));
  if (f.output.empty() || f.output == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(f.output);
  file << text;
  if (!file) throw FormatError("cannot write " + f.output);
  return kExitOk;
}

int cmd_bound(const Flags& f, std::ostream& out) {
  Real eps;
  try {
    eps = Real(f.epsilon);
  } catch (const std::exception&) {
    throw DomainError("epsilon is not a number: " + f.epsilon);
  }
  const auto variant = f.gamma == "ball" ? GammaVariant::BallVolume : GammaVariant::Theorem;
  out << t_lower_bound(eps, f.p, variant).str(12) << '\n';
  return kExitOk;
}

int cmd_random_word(const Flags& f, std::ostream& out) {
  out << print(nf_to_word(random_nf(f.p, f.hcount, f.seed))) << '\n';
  return kExitOk;
}

int emit(const VerifyReport& r, const Flags& f, std::ostream& out) {
  out << to_record(r, f.time) << '\n';
  return r.ok() ? kExitOk : kExitSemantic;
}

HarnessOptions harness(const Flags& f) { return {f.workers, f.inject_fault}; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact normal forms and synthesis for single-qudit Clifford+T operators", "qnf"};
  app.require_subcommand(1);
  Flags f;
  const auto prime = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("-p,--prime", f.p, "odd prime dimension, at least 5");
    if (required) opt->required();
  };
  const auto pool = [&](CLI::App* sub) {
    sub->add_option("--workers", f.workers, "worker threads (1 = serial)")->check(CLI::Range(1U, 1024U));
    sub->add_flag("--inject-fault", f.inject_fault, "corrupt one trial to exercise failure reporting");
    sub->add_flag("--time", f.time, "append wall_seconds to the record");
  };

  auto* normalize_cmd = app.add_subcommand("normalize", "rewrite a word into normal form");
  prime(normalize_cmd);
  normalize_cmd->add_option("word", f.word, "gate word, e.g. \"H T^2 S\"")->required();

  auto* synth_cmd = app.add_subcommand("synth", "synthesize a normal form from a matrix file");
  prime(synth_cmd, false);
  synth_cmd->add_option("file", f.file, "matrix file, or - for standard input")->required();

  auto* matrix_cmd = app.add_subcommand("matrix", "write the matrix of a word");
  prime(matrix_cmd);
  matrix_cmd->add_option("word", f.word, "gate word")->required();
  matrix_cmd->add_option("-o,--output", f.output, "output file (default standard output)");

  auto* bound_cmd = app.add_subcommand("bound", "T-count lower bound for approximation to epsilon");
  prime(bound_cmd);
  bound_cmd->add_option("--epsilon", f.epsilon, "target accuracy in (0, 1)")->required();
  bound_cmd->add_option("--gamma-variant", f.gamma, "theorem or ball")->check(CLI::IsMember({"theorem", "ball"}));

  auto* random_cmd = app.add_subcommand("random-word", "print a random normal-form word");
  prime(random_cmd);
  random_cmd->add_option("--hcount", f.hcount, "H'-count of the normal form");
  random_cmd->add_option("--seed", f.seed, "random seed");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification check");
  verify_cmd->require_subcommand(1);
  auto* vhom = verify_cmd->add_subcommand("v-hom", "V(F) V(G) = V(FG)");
  prime(vhom);
  vhom->add_flag("--exhaustive", f.exhaustive, "all pairs (p <= 7)");
  vhom->add_option("--trials", f.trials, "sampled pairs (default 2000)");
  vhom->add_option("--seed", f.seed, "random seed");
  pool(vhom);
  auto* relations = verify_cmd->add_subcommand("relations", "commutation relations and generator orders");
  prime(relations);
  pool(relations);
  auto* conjecture = verify_cmd->add_subcommand("conjecture", "lde of random normal forms against the conjectured value");
  prime(conjecture);
  conjecture->add_option("--hmax", f.hmax, "largest H'-count (default 8)");
  conjecture->add_option("--trials", f.trials, "normal forms per H'-count (default 200)");
  conjecture->add_option("--seed", f.seed, "random seed");
  pool(conjecture);
  auto* uniqueness = verify_cmd->add_subcommand("uniqueness", "distinct normal forms give distinct operators");
  prime(uniqueness);
  uniqueness->add_option("--hcount", f.hcount, "H'-count of both forms (default 3)");
  uniqueness->add_option("--trials", f.trials, "pairs (default 1000)");
  uniqueness->add_option("--seed", f.seed, "random seed");
  pool(uniqueness);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto or_default = [](std::size_t v, std::size_t d) { return v == 0 ? d : v; };
  try {
    if (*normalize_cmd) return cmd_normalize(f, out);
    if (*synth_cmd) return cmd_synth(f, out, err, in);
    if (*matrix_cmd) return cmd_matrix(f, out);
    if (*bound_cmd) return cmd_bound(f, out);
    if (*random_cmd) return cmd_random_word(f, out);
    if (*vhom) {
      const VMode mode = f.exhaustive ? VMode::all_pairs() : VMode::sampled(or_default(f.trials, 2000), f.seed);
      return emit(verify_v_homomorphism(f.p, mode, harness(f)), f, out);
    }
    if (*relations) return emit(verify_relations(f.p, harness(f)), f, out);
    if (*conjecture) {
      return emit(verify_conjecture(f.p, f.hmax, or_default(f.trials, 200), f.seed, harness(f)), f, out);
    }
    if (*uniqueness) {
      return emit(verify_uniqueness(f.p, or_default(f.hcount, 3), or_default(f.trials, 1000), f.seed, harness(f)),
                  f, out);
    }
  } catch (const EntriesOutsideRing& e) {
    err << "EntriesOutsideRing: " << e.what() << '\n';
    return kExitSemantic;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_cli(args, out, err, std::cin);
}

}  // namespace qnf
