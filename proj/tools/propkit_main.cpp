// propkit command-line front end: parsing, evaluation, truth tables,
// validity decisions, proof synthesis, proof translation, cut elimination
// and proof checking over the JSON derivation format.
//
// Exit codes: 0 success; 1 invalid / refuted (countervaluation printed);
// 2 input error; 3 internal invariant breach.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "propkit/cutfree.hpp"
#include "propkit/errors.hpp"
#include "propkit/formula.hpp"
#include "propkit/hilbert.hpp"
#include "propkit/natded.hpp"
#include "propkit/normalforms.hpp"
#include "propkit/semantics.hpp"
#include "propkit/sequent.hpp"
#include "propkit/serialize.hpp"

namespace {

using namespace propkit;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::optional<std::string>& path, const std::string& data) {
  if (!path) {
    std::cout << data;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw InputError{"cannot write '" + path.value() + "'"};
  out << data;
}

Formula parse_formula_arg(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError{std::string("formula: ") + e.what()};
  }
}

Context parse_side(const std::string& text) {
  Context out;
  std::size_t pos = 0;
  auto trim = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  if (trim(text).empty()) return out;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string piece = trim(text.substr(pos, comma - pos));
    if (piece.empty()) throw InputError{"sequent: empty formula in list"};
    out.push_back(parse_formula_arg(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Sequent parse_sequent_arg(const std::string& text) {
  std::size_t sep = text.find("=>");
  if (sep == std::string::npos) throw InputError{"sequent: missing '=>' separator"};
  if (text.find("=>", sep + 2) != std::string::npos)
    throw InputError{"sequent: more than one '=>' separator"};
  return Sequent{parse_side(text.substr(0, sep)), parse_side(text.substr(sep + 2))};
}

Valuation parse_valuation_arg(const std::string& text) {
  try {
    return Valuation::parse(text);
  } catch (const ParseError& e) {
    throw InputError{std::string("valuation: ") + e.what()};
  }
}

AnyDerivation load_derivation(const std::string& path) {
  try {
    return derivation_from_json(read_file(path));
  } catch (const FormatError& e) {
    throw InputError{path + ": " + e.what()};
  }
}

// Checks a loaded derivation with its calculus checker; returns a printable
// conclusion line.
std::string check_any(const AnyDerivation& d) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NcDerivation>) {
          Judgement j = check_nc(x);
          std::string out = "nc: ";
          for (std::size_t i = 0; i < j.context.size(); ++i)
            out += (i ? ", " : "") + to_string(j.context[i]);
          return out + (j.context.empty() ? "|- " : " |- ") + to_string(j.formula);
        } else if constexpr (std::is_same_v<T, HcDerivation>) {
          Judgement j = check_hc(x);
          std::string out = "hc: ";
          for (std::size_t i = 0; i < j.context.size(); ++i)
            out += (i ? ", " : "") + to_string(j.context[i]);
          return out + (j.context.empty() ? "|- " : " |- ") + to_string(j.formula);
        } else if constexpr (std::is_same_v<T, GcDerivation>) {
          return "gc: " + to_string(check_gc(x));
        } else {
          return "gcf: " + to_string(check_gcf(x));
        }
      },
      d);
}

NcDerivation to_nc(const AnyDerivation& d) {
  if (const auto* nc = std::get_if<NcDerivation>(&d)) return *nc;
  if (const auto* hc = std::get_if<HcDerivation>(&d)) return hc_to_nc(*hc);
  if (const auto* gc = std::get_if<GcDerivation>(&d)) return g_to_nc(*gc);
  return g_to_nc(std::get<GcfDerivation>(d).as_gc());
}

int run_parse(const std::string& text) {
  std::cout << to_string(parse_formula_arg(text)) << "\n";
  return kOk;
}

int run_eval(const std::string& text, const std::string& valuation) {
  Formula f = parse_formula_arg(text);
  Valuation v = parse_valuation_arg(valuation);
  std::cout << (eval(v, f) ? "true" : "false") << "\n";
  return kOk;
}

int run_table(const std::string& text) {
  Formula f = parse_formula_arg(text);
  auto vars = variables_of(f);
  if (vars.size() > kDefaultVariableCap)
    throw InputError{"refusing to tabulate " + std::to_string(vars.size()) + " variables"};
  std::string header;
  for (const VarName& v : vars) header += v.name + " ";
  header += header.empty() ? to_string(f) : " " + to_string(f);
  std::cout << header << "\n";
  const std::uint64_t rows = std::uint64_t{1} << vars.size();
  for (std::uint64_t r = 0; r < rows; ++r) {
    Valuation v;
    std::string line;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      bool b = (r >> (vars.size() - 1 - j)) & 1u;
      v.set(vars[j], b);
      line += b ? "1 " : "0 ";
    }
    line += line.empty() ? "" : " ";
    line += eval(v, f) ? "1" : "0";
    std::cout << line << "\n";
  }
  return kOk;
}

int emit_checked(const AnyDerivation& d, const std::optional<std::string>& out) {
  check_any(d);  // re-check everything we are about to emit
  write_output(out, to_json(d));
  return kOk;
}

int run_decide_formula(const std::string& text, const std::optional<std::string>& out) {
  Formula f = parse_formula_arg(text);
  CompletenessResult r = complete(f);
  if (!r.provable()) {
    std::cout << "INVALID\n" << r.countervaluation.to_string() << "\n";
    return kInvalid;
  }
  std::cout << "VALID\n";
  if (out) emit_checked(AnyDerivation{*r.proof}, out);
  return kOk;
}

int run_decide_sequent(const std::string& text, const std::optional<std::string>& out) {
  Sequent s = parse_sequent_arg(text);
  DecisionResult r = gcf_prove(s);
  if (!r.proved()) {
    std::cout << "INVALID\n" << r.countervaluation.to_string() << "\n";
    return kInvalid;
  }
  std::cout << "VALID\n";
  if (out) emit_checked(AnyDerivation{*r.proof}, out);
  return kOk;
}

int run_prove(const std::string& text, const std::string& calculus,
              const std::optional<std::string>& out) {
  Formula f = parse_formula_arg(text);
  if (calculus == "gcf") {
    DecisionResult r = gcf_prove(Sequent{{}, {f}});
    if (!r.proved()) {
      std::cout << "INVALID\n" << r.countervaluation.to_string() << "\n";
      return kInvalid;
    }
    return emit_checked(AnyDerivation{*r.proof}, out);
  }
  CompletenessResult r = complete(f);
  if (!r.provable()) {
    std::cout << "INVALID\n" << r.countervaluation.to_string() << "\n";
    return kInvalid;
  }
  if (calculus == "nc") return emit_checked(AnyDerivation{*r.proof}, out);
  if (calculus == "hc") return emit_checked(AnyDerivation{nc_to_hc(*r.proof)}, out);
  return emit_checked(AnyDerivation{nc_to_g(*r.proof)}, out);  // gc
}

int run_translate(const std::string& path, const std::string& target,
                  const std::optional<std::string>& out) {
  AnyDerivation d = load_derivation(path);
  check_any(d);
  NcDerivation nc = to_nc(d);
  if (target == "nc") return emit_checked(AnyDerivation{nc}, out);
  if (target == "hc") return emit_checked(AnyDerivation{nc_to_hc(nc)}, out);
  return emit_checked(AnyDerivation{nc_to_g(nc)}, out);  // gc
}

int run_cut_elim(const std::string& path, const std::optional<std::string>& out) {
  AnyDerivation d = load_derivation(path);
  const GcDerivation* gc = std::get_if<GcDerivation>(&d);
  const GcfDerivation* gcf = std::get_if<GcfDerivation>(&d);
  if (!gc && !gcf) throw InputError{path + ": cut-elim expects a gc or gcf derivation"};
  GcfDerivation result = cut_elimination(gc ? *gc : gcf->as_gc());
  return emit_checked(AnyDerivation{std::move(result)}, out);
}

int run_check(const std::string& path) {
  AnyDerivation d = load_derivation(path);
  std::cout << check_any(d) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"propositional proof kernel and tautology decision toolkit"};
  app.require_subcommand(1);

  std::string formula_text, valuation_text, sequent_text, file_path;
  std::string calculus = "nc", target;
  std::optional<std::string> out_path;

  auto* cmd_parse = app.add_subcommand("parse", "parse a formula and print it normalized");
  cmd_parse->add_option("formula", formula_text)->required();

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a formula under a valuation");
  cmd_eval->add_option("formula", formula_text)->required();
  cmd_eval->add_option("--val", valuation_text, "e.g. \"p=true,q=false\"");

  auto* cmd_table = app.add_subcommand("table", "print the full truth table");
  cmd_table->add_option("formula", formula_text)->required();

  auto* cmd_decide = app.add_subcommand("decide", "decide validity of a formula or sequent");
  cmd_decide->add_option("formula", formula_text);
  cmd_decide->add_option("--sequent", sequent_text, "e.g. \"p, q => p\"");
  cmd_decide->add_option("-o,--output", out_path, "write the proof here");

  auto* cmd_prove = app.add_subcommand("prove", "synthesize a proof of a valid formula");
  cmd_prove->add_option("formula", formula_text)->required();
  cmd_prove->add_option("--calculus", calculus)
      ->check(CLI::IsMember({"nc", "hc", "gc", "gcf"}));
  cmd_prove->add_option("-o,--output", out_path);

  auto* cmd_translate = app.add_subcommand("translate", "translate a derivation file");
  cmd_translate->add_option("file", file_path)->required();
  cmd_translate->add_option("--to", target)->required()->check(CLI::IsMember({"nc", "hc", "gc"}));
  cmd_translate->add_option("-o,--output", out_path);

  auto* cmd_cut_elim = app.add_subcommand("cut-elim", "eliminate cuts from a gc derivation");
  cmd_cut_elim->add_option("file", file_path)->required();
  cmd_cut_elim->add_option("-o,--output", out_path);

  auto* cmd_check = app.add_subcommand("check", "check a derivation file");
  cmd_check->add_option("file", file_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_parse->parsed()) return run_parse(formula_text);
    if (cmd_eval->parsed()) return run_eval(formula_text, valuation_text);
    if (cmd_table->parsed()) return run_table(formula_text);
    if (cmd_decide->parsed()) {
      const bool have_formula = !formula_text.empty();
      const bool have_sequent = cmd_decide->count("--sequent") > 0;
      if (have_formula == have_sequent)
        throw InputError{"decide takes either a formula or --sequent"};
      return have_sequent ? run_decide_sequent(sequent_text, out_path)
                          : run_decide_formula(formula_text, out_path);
    }
    if (cmd_prove->parsed()) return run_prove(formula_text, calculus, out_path);
    if (cmd_translate->parsed()) return run_translate(file_path, target, out_path);
    if (cmd_cut_elim->parsed()) return run_cut_elim(file_path, out_path);
    if (cmd_check->parsed()) return run_check(file_path);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kInputError;
  } catch (const SoundnessBreachError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternalError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
