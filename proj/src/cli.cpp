#include "posinv/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "posinv/codebook.hpp"
#include "posinv/description.hpp"
#include "posinv/errors.hpp"
#include "posinv/positivity.hpp"

namespace posinv {

namespace {

struct Options {
  std::string file;
  unsigned precision_bits = 0;
  unsigned max_precision_bits = 0;
  std::string report = "text";
  std::string method = "both";
  std::string strategy = "products";
  std::size_t size = 16;
  int height = 8;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string csv_path;
  bool force = false;
};

// What a command produces: checks, free-form facts, and an exit code
// forced by something other than a failing check.
struct Outcome {
  Report report;
  Json info = Json::object();
  std::optional<int> code;
};

Instance load(const Options& o) {
  return build_instance(load_description(o.file), o.precision_bits, o.max_precision_bits);
}

AlgebraPtr algebra_of(const Instance& inst) {
  try {
    return CrossedProduct::create(inst.tower, inst.cocycle);
  } catch (const StructuralError& e) {
    throw InputError(e.what());
  }
}

Json unit_witnesses(const Tower& t, const CocycleTable& c) {
  Json w = Json::array();
  for (std::size_t s = 0; s < t.n(); ++s)
    for (std::size_t r = 0; r < t.n(); ++r) {
      const NFElem& x = c(s, r);
      if (!(apply(t.alpha(), x) * x).is_one())
        w.push_back({{"s", t.at(t.group()[s]).name}, {"r", t.at(t.group()[r]).name}, {"xi", x.to_literal()}});
    }
  return w;
}

Outcome cmd_validate(const Options& o) {
  Instance inst = load(o);
  Outcome res;
  res.report.append(validate_tower(*inst.tower));
  res.report.append(cocycle_validate(*inst.tower, inst.cocycle));
  CheckResult unit("cocycle_unitary");
  for (const auto& w : unit_witnesses(*inst.tower, inst.cocycle)) unit.fail(w);
  res.report.add(std::move(unit));
  CheckResult conj("alpha_is_conjugation");
  conj.precision_used = inst.ctx.precision_bits();
  if (!inst.alpha_is_conjugation) {
    Json w = {{"alpha", inst.tower->alpha().name}};
    if (inst.conjugation_index) w["conjugation_is"] = inst.tower->at(*inst.conjugation_index).name;
    conj.fail(w);
  }
  res.report.add(std::move(conj));
  return res;
}

struct Built {
  Instance inst;
  Involution tau;
  Report validation;
};

Built build(const Options& o) {
  Instance inst = load(o);
  Involution tau = build_tau(algebra_of(inst));
  Report v = validate_involution(tau);
  return Built{std::move(inst), std::move(tau), std::move(v)};
}

Outcome cmd_involution(const Options& o) {
  Built b = build(o);
  Outcome res;
  res.report = b.validation;
  const CrossedProduct& B = b.tau.algebra();
  Json images = Json::object();
  for (std::size_t s = 0; s < B.n(); ++s) images["tau(e_" + B.sigma(s).name + ")"] = b.tau.gen_images()[s].to_string();
  res.info["generator_images"] = images;
  if (B.rescaled()) res.info["cocycle_rescaled_by"] = B.rescale().to_string();
  if (b.validation.ok()) {
    res.info["dim_sym"] = symmetric_basis(b.tau).size();
    res.info["dim_skew"] = skew_basis(b.tau).size();
  }
  return res;
}

Outcome cmd_positivity(const Options& o) {
  if (o.method != "trace-form" && o.method != "transport" && o.method != "both")
    throw InputError("unknown method '" + o.method + "'");
  Built b = build(o);
  Outcome res;
  if (!b.validation.ok()) {
    res.report = b.validation;
    return res;
  }
  std::optional<Definiteness> tf;
  std::optional<TransportSignature> ts;
  if (o.method != "transport") {
    Stopwatch sw;
    CheckResult c("trace_form_positive");
    tf = definiteness(trace_form_gram(b.tau), b.inst.ctx);
    c.details["definiteness"] = to_json(*tf);
    if (tf->kind != DefKind::kPosDef) c.fail({{"kind", to_string(tf->kind)}, {"signature", {tf->p, tf->q}}});
    c.seconds = sw.seconds();
    c.precision_used = b.inst.ctx.precision_bits();
    res.report.add(std::move(c));
  }
  if (o.method != "trace-form") {
    Stopwatch sw;
    CheckResult c("transport_positive");
    TransportMatrix tm = transport_hermitian(b.tau);
    ts = transport_definiteness(tm, b.inst.ctx);
    Json a = Json::array();
    for (std::size_t i = 0; i < tm.A.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < tm.A.cols(); ++j) row.push_back(tm.A(i, j).to_string());
      a.push_back(row);
    }
    c.details["A"] = a;
    c.details["hermitian"] = to_json(ts->hermitian);
    c.details["implied_trace_form"] = to_json(ts->implied_trace_form);
    c.details["sign_flipped"] = ts->sign_flipped;
    for (const auto& n : tm.notes) c.notes.push_back(n);
    for (const auto& n : ts->notes) c.notes.push_back(n);
    if (!ts->alpha_is_conjugation || ts->hermitian.kind != DefKind::kPosDef)
      c.fail({{"hermitian", to_json(ts->hermitian)}, {"implied_trace_form", to_json(ts->implied_trace_form)}});
    c.seconds = sw.seconds();
    c.precision_used = b.inst.ctx.precision_bits();
    res.report.add(std::move(c));
  }
  if (tf && ts) {
    CheckResult c("methods_agree");
    c.details["trace_form"] = to_json(*tf);
    c.details["transport_implied"] = to_json(ts->implied_trace_form);
    if (!(*tf == ts->implied_trace_form)) {
      c.fail({{"trace_form", to_json(*tf)}, {"transport_implied", to_json(ts->implied_trace_form)}});
      res.code = kExitInternal;
    }
    res.report.add(std::move(c));
  }
  return res;
}

Outcome cmd_theorems(const Options& o) {
  Instance inst = load(o);
  Outcome res;
  res.report.add(lemma21_check(*inst.tower));
  Involution tau = build_tau(algebra_of(inst));
  res.report.add(prop22_check(tau, inst.ctx));
  res.report.add(prop23_check(tau, inst.ctx));
  res.report.add(cor24_check(tau, inst.ctx));
  res.report.add(iff_check(inst.tower, inst.cocycle, inst.ctx));
  Json table = Json::array();
  for (const auto& c : res.report.checks)
    table.push_back({{"check", c.check},
                     {"hypotheses_met", c.status != Status::kNotApplicable},
                     {"conclusion_verified", c.status == Status::kPass}});
  res.info["theorems"] = table;
  return res;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!f) throw InputError("write failed for " + path);
}

Outcome cmd_codebook(const Options& o, std::ostream& err) {
  CodebookParams p;
  p.strategy = parse_strategy(o.strategy);
  p.size_limit = o.size;
  p.height_bound = o.height;
  p.seed = o.seed;
  if (p.size_limit < 2) throw InputError("--size must be at least 2");
  if (p.height_bound < 1) throw InputError("--height must be at least 1");
  Built b = build(o);
  Outcome res;
  if (!b.validation.ok()) {
    res.report = b.validation;
    return res;
  }
  if (!is_positive(b.tau, b.inst.ctx)) {
    if (!o.force) {
      CheckResult c("positivity_precondition");
      c.fail({{"reason", "tau is not positive; rerun with --force to generate anyway"}});
      res.report.add(std::move(c));
      return res;
    }
    err << "warning: tau is not positive at this embedding; codewords need not embed as unitary matrices\n";
    res.info["warning"] = "tau is not positive";
  }
  Stopwatch sw;
  Codebook cb = generate(b.tau, p);
  CheckResult unit("codewords_unitary");
  for (std::size_t i = 0; i < cb.codewords.size(); ++i)
    if (!is_unitary_element(b.tau, cb.codewords[i])) unit.fail({{"index", i}, {"codeword", cb.codewords[i].to_json()}});
  unit.details["size"] = cb.codewords.size();
  unit.seconds = sw.seconds();
  res.report.add(std::move(unit));

  Stopwatch sw2;
  auto mats = to_matrices(cb, b.inst.ctx);
  CheckResult mu("matrices_unitary");
  Rat worst = 0;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    worst = std::max(worst, mats[i].residual.hi);
    if (!mats[i].unitary) mu.fail({{"index", i}, {"residual_lower_bound", to_decimal(mats[i].residual.lo, 6)}});
  }
  mu.details["max_residual_bound"] = to_decimal(worst, 6);
  mu.seconds = sw2.seconds();
  mu.precision_used = b.inst.ctx.precision_bits();
  res.report.add(std::move(mu));

  Stopwatch sw3;
  DiversityReport div = diversity(cb, b.inst.ctx);
  CheckResult fd("fully_diverse");
  fd.details["pairs"] = div.pairs;
  fd.details["singular_pairs"] = div.singular_pairs.size();
  if (div.diversity_product)
    fd.details["diversity_product"] = {to_decimal(div.diversity_product->lo, 20),
                                       to_decimal(div.diversity_product->hi, 20)};
  for (const auto& [i, j] : div.singular_pairs) {
    if (fd.witnesses.size() >= 8) break;
    fd.fail({{"i", i}, {"j", j}, {"X", cb.codewords[i].to_json()}, {"Y", cb.codewords[j].to_json()}});
  }
  if (!div.singular_pairs.empty()) fd.status = Status::kFail;
  fd.seconds = sw3.seconds();
  fd.precision_used = div.precision_bits;
  res.report.add(std::move(fd));

  Json ex = export_json(cb, mats, div, b.inst.ctx, b.inst.desc.name);
  if (!o.out_path.empty()) {
    write_file(o.out_path, ex.dump(2) + "\n");
    res.info["out"] = o.out_path;
  }
  if (!o.csv_path.empty()) {
    write_file(o.csv_path, export_csv(mats, b.inst.ctx));
    res.info["csv"] = o.csv_path;
  }
  res.info["size"] = cb.codewords.size();
  return res;
}

void print(const Outcome& res, const std::string& command, const Options& o, int code, std::ostream& out) {
  if (o.report == "json") {
    Json j = {{"command", command}, {"file", o.file}, {"exit_code", code}, {"checks", to_json(res.report)}};
    if (!res.info.empty()) j["info"] = res.info;
    out << j.dump(2) << '\n';
    return;
  }
  out << command << ": " << o.file << '\n';
  for (const auto& [k, v] : res.info.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  out << to_text(res.report);
}

void print_error(const std::string& command, const Options& o, int code, const std::string& kind,
                 const std::string& what, std::ostream& out, std::ostream& err) {
  if (o.report == "json") {
    out << Json({{"command", command}, {"file", o.file}, {"exit_code", code}, {"error", kind}, {"message", what}})
               .dump(2)
        << '\n';
  }
  err << "error (" << kind << "): " << what << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Positive unitary involutions on crossed-product algebras"};
  app.require_subcommand(1);
  app.add_option("--precision-bits", o.precision_bits, "Working precision of the embedding")
      ->envname("POSINV_PRECISION_BITS")
      ->check(CLI::Range(8u, 1u << 20));
  app.add_option("--max-precision-bits", o.max_precision_bits, "Precision cap for sign decisions")
      ->envname("POSINV_MAX_PRECISION_BITS")
      ->check(CLI::Range(8u, 1u << 20));
  app.add_option("--report", o.report, "Report format")
      ->envname("POSINV_REPORT")
      ->check(CLI::IsMember({"text", "json"}));

  auto* validate = app.add_subcommand("validate", "Validate the tower, the cocycle and the embedding");
  auto* involution = app.add_subcommand("involution", "Build tau and check the involution axioms");
  auto* positivity = app.add_subcommand("positivity", "Decide positivity of tau");
  auto* theorems = app.add_subcommand("theorems", "Run the theorem checkers");
  auto* codebook = app.add_subcommand("codebook", "Generate and export a unitary codebook");
  for (auto* sc : {validate, involution, positivity, theorems, codebook})
    sc->add_option("file", o.file, "Algebra description (JSON)")->required();
  positivity->add_option("--method", o.method, "trace-form, transport or both")
      ->check(CLI::IsMember({"trace-form", "transport", "both"}));
  codebook->add_option("--strategy", o.strategy, "products, cayley or mixed")
      ->check(CLI::IsMember({"products", "cayley", "mixed"}));
  codebook->add_option("--size", o.size, "Maximum number of codewords");
  codebook->add_option("--height", o.height, "Height bound for Cayley coefficients");
  codebook->add_option("--seed", o.seed, "Seed for Cayley sampling");
  codebook->add_option("--out", o.out_path, "JSON export path");
  codebook->add_option("--csv", o.csv_path, "CSV export path");
  codebook->add_flag("--force", o.force, "Generate even if tau is not positive");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error (input): " << e.what() << '\n';
    return kExitInput;
  }
  if (o.max_precision_bits && o.precision_bits > o.max_precision_bits) {
    err << "error (input): --precision-bits exceeds --max-precision-bits\n";
    return kExitInput;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    Outcome res;
    if (command == "validate") res = cmd_validate(o);
    if (command == "involution") res = cmd_involution(o);
    if (command == "positivity") res = cmd_positivity(o);
    if (command == "theorems") res = cmd_theorems(o);
    if (command == "codebook") res = cmd_codebook(o, err);
    int code = res.code ? *res.code : (res.report.ok() ? kExitPass : kExitFail);
    print(res, command, o, code, out);
    return code;
  } catch (const InputError& e) {
    print_error(command, o, kExitInput, "input", e.what(), out, err);
    return kExitInput;
  } catch (const StructuralError& e) {
    print_error(command, o, kExitInput, "structure", e.what(), out, err);
    return kExitInput;
  } catch (const PrecisionExhausted& e) {
    print_error(command, o, kExitPrecision, "precision", e.what(), out, err);
    return kExitPrecision;
  } catch (const std::exception& e) {
    print_error(command, o, kExitInternal, "internal", e.what(), out, err);
    return kExitInternal;
  }
}

}  // namespace posinv
