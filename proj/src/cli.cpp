#include "gasket/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gasket/errors.hpp"
#include "gasket/report.hpp"
#include "gasket/tables.hpp"

namespace gasket::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to the -o file when given, else to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct DimArgs {
  std::string spec;
  std::size_t budget = EnumerationBudget{}.max_words;
  int depth = EnumerationBudget{}.max_depth;
  std::string mode = "certified";
  std::string domain = "refined";
  bool no_ratio = false;
  bool symmetry = false;
  unsigned threads = 0;
  int truncation = 26;
  long tail_terms = 10'000;
  std::string format = "json";
  std::string output;
  bool no_meta = false;
};

DimOptions dim_options(const DimArgs& a) {
  DimOptions o;
  o.budget.max_words = a.budget;
  o.budget.max_depth = a.depth;
  o.budget.mode = a.mode == "exploratory" ? BudgetMode::Exploratory : BudgetMode::Certified;
  o.domain = a.domain == "disk" ? DomainMode::WholeDisk : DomainMode::FirstLevelRefined;
  o.use_ratio = !a.no_ratio;
  o.symmetry_reduction = a.symmetry;
  o.threads = a.threads;
  o.truncation = a.truncation;
  o.tail_terms = a.tail_terms;
  return o;
}

void add_budget_flags(CLI::App* cmd, DimArgs& a) {
  cmd->add_option("--budget", a.budget, "max words (or cylinder-word cells) per census")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--depth", a.depth, "max word length")->check(CLI::PositiveNumber);
  cmd->add_option("--mode", a.mode, "certified | exploratory")
      ->check(CLI::IsMember({"certified", "exploratory"}));
  cmd->add_option("--domain", a.domain, "refined | disk")->check(CLI::IsMember({"refined", "disk"}));
  cmd->add_flag("--no-ratio", a.no_ratio, "plain partition bracketing only");
  cmd->add_flag("--symmetry", a.symmetry, "fold the first letter's rotation index");
  cmd->add_option("--threads", a.threads, "worker threads (0 = all cores)");
  cmd->add_option("--truncation", a.truncation, "cofinite: finite part for the lower bound")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tail-terms", a.tail_terms, "cofinite: explicit tail terms")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified computations for the Apollonian gasket IFS", "gasket"};
  app.require_subcommand(1);

  std::string const_format = "text";
  auto* constants = app.add_subcommand("constants", "distortion constants and their enclosures");
  constants->add_option("--format", const_format)->check(CLI::IsMember({"text", "json"}));

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "certified Hausdorff dimension bracket");
  dim_cmd->add_option("spec", dim.spec, "subsystem, e.g. \"n in {3,4,5}\" or \"n!={1,2}\"")
      ->required();
  add_budget_flags(dim_cmd, dim);
  dim_cmd->add_option("--format", dim.format)->check(CLI::IsMember({"json", "text"}));
  dim_cmd->add_option("-o,--output", dim.output);
  dim_cmd->add_flag("--no-meta", dim.no_meta, "omit wall-clock time");

  double tail_t2 = 0, tail_K = 0;
  int tail_M = 0;
  long tail_limit = TailOptions{}.direct_sum_limit;
  bool tail_integral = false, exact_norms = false;
  std::string tail_format = "text";
  auto* tail = app.add_subcommand("tail", "check the tail condition from M onwards");
  tail->add_option("t2", tail_t2)->required();
  tail->add_option("K", tail_K)->required();
  tail->add_option("M", tail_M)->required()->check(CLI::PositiveNumber);
  tail->add_option("--limit", tail_limit, "last index of the direct partial sums")
      ->check(CLI::PositiveNumber);
  tail->add_flag("--integral-tail", tail_integral, "add the integral bound past --limit");
  tail->add_flag("--exact-norms", exact_norms, "sup over the unit disk instead of the closed form");
  tail->add_option("--format", tail_format)->check(CLI::IsMember({"text", "json"}));

  std::string chain_file, provider = "mixed", chain_format = "text", chain_out;
  DimArgs chain_dim;
  bool chain_no_meta = false;
  auto* chain = app.add_subcommand("chain", "certify a chain of bootstrapping steps");
  chain->add_option("stepfile", chain_file)->required();
  chain->add_option("--provider", provider)->check(CLI::IsMember({"assumed", "computed", "mixed"}));
  add_budget_flags(chain, chain_dim);
  chain->add_option("--format", chain_format)->check(CLI::IsMember({"text", "json", "csv"}));
  chain->add_option("-o,--output", chain_out);
  chain->add_option("--limit", tail_limit)->check(CLI::PositiveNumber);
  chain->add_flag("--exact-norms", exact_norms, "tail condition with matrix sup norms");
  chain->add_flag("--no-meta", chain_no_meta, "accepted for symmetry; chain output has no timestamps");

  std::string render_spec, render_out;
  RenderOptions ropts;
  auto* render = app.add_subcommand("render", "SVG of image disks");
  render->add_option("spec", render_spec)->required();
  render->add_option("--iters", ropts.iterations)->check(CLI::Range(0, 4));
  render->add_option("-o,--output", render_out)->required();
  render->add_option("--truncation", ropts.truncation)->check(CLI::PositiveNumber);
  render->add_flag("--descartes", ropts.descartes, "add the Descartes chain along the real axis");
  render->add_option("--descartes-count", ropts.descartes_count)->check(CLI::Range(1, 64));
  render->add_option("--max-disks", ropts.max_disks)->check(CLI::PositiveNumber);

  std::string export_what, export_file, export_format = "json", export_out;
  DimArgs export_dim;
  auto* exp = app.add_subcommand("export", "canonical steps or certificates as JSON/CSV");
  exp->add_option("what", export_what)->required()->check(CLI::IsMember({"steps", "certificates"}));
  exp->add_option("--stepfile", export_file, "step file (default: built-in chain)");
  exp->add_option("--provider", provider)->check(CLI::IsMember({"assumed", "computed", "mixed"}));
  add_budget_flags(exp, export_dim);
  exp->add_option("--format", export_format)->check(CLI::IsMember({"json", "csv"}));
  exp->add_option("-o,--output", export_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (constants->parsed()) {
      const Json report = constants_report();
      out << (const_format == "json" ? dump(report) : constants_text(report));
      return kOk;
    }

    if (dim_cmd->parsed()) {
      const Subsystem F = Subsystem::parse(dim.spec);
      const DimBracket b = dim_bracket(F, dim_options(dim));
      emit(dim.format == "json" ? dump(to_json(b, !dim.no_meta)) : dim_text(b), dim.output, out);
      return kOk;
    }

    if (tail->parsed()) {
      TailOptions topts;
      topts.direct_sum_limit = tail_limit;
      topts.integral_tail = tail_integral;
      topts.exact_norms = exact_norms;
      const TailVerdict v = check_tail_condition(tail_t2, tail_K, tail_M, topts);
      if (tail_format == "json") {
        out << dump(to_json(v));
      } else {
        out << (v.passed ? "pass" : "FAIL") << ": t2 = " << format_double(tail_t2, 10)
            << ", K = " << format_double(tail_K, 10) << ", M >= " << tail_M << '\n'
            << "  N = " << v.N_closed_form << " (closed form)\n  " << v.detail << '\n';
      }
      return v.passed ? kOk : kCertifiedFailure;
    }

    auto chain_report = [&](const std::string& file, const DimArgs& budget) {
      std::vector<SpectrumStep> steps = file.empty() ? canonical_steps() : load_steps(file);
      if (steps.empty()) throw UsageError("step file holds no steps");
      auto p = make_provider(provider, dim_options(budget));
      TailOptions topts;
      topts.direct_sum_limit = tail_limit;
      topts.exact_norms = exact_norms;
      return run_chain(steps, *p, topts);
    };

    if (chain->parsed()) {
      const ChainReport rep = chain_report(chain_file, chain_dim);
      std::string text;
      if (chain_format == "json") {
        text = dump(to_json(rep));
      } else if (chain_format == "csv") {
        text = certificates_csv(rep.certificates);
      } else {
        text = chain_text(rep);
      }
      emit(text, chain_out, out);
      if (!chain_out.empty() && chain_format != "text") out << chain_text(rep);
      return rep.all_passed() && rep.gaps.empty() ? kOk : kCertifiedFailure;
    }

    if (render->parsed()) {
      const Subsystem F = Subsystem::parse(render_spec);
      const RenderResult res = render_svg(F, ropts);
      emit(res.svg, render_out, out);
      out << "wrote " << res.disks << " image disks to " << render_out << '\n';
      return kOk;
    }

    if (exp->parsed()) {
      if (export_what == "steps") {
        const auto steps = export_file.empty() ? canonical_steps() : load_steps(export_file);
        emit(export_format == "json" ? dump(steps_to_json(steps)) : steps_csv(steps), export_out,
             out);
        return kOk;
      }
      const ChainReport rep = chain_report(export_file, export_dim);
      Json certs = Json::array();
      for (const auto& c : rep.certificates) certs.push_back(to_json(c));
      emit(export_format == "json" ? dump(certs) : certificates_csv(rep.certificates), export_out,
           out);
      return rep.all_passed() ? kOk : kCertifiedFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GasketError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
  return kUsage;
}

}  // namespace gasket::cli
