#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quiverlab/dsl.hpp"
#include "quiverlab/errors.hpp"
#include "quiverlab/forms.hpp"
#include "quiverlab/json_io.hpp"
#include "quiverlab/moment.hpp"
#include "quiverlab/necklace.hpp"
#include "quiverlab/sigma.hpp"

namespace quiverlab::cli {

namespace {

struct Options {
  std::string input;
  std::string alpha;
  std::string lambda;
  std::string box;
  std::string w1, w2;
  std::string type;
  std::uint64_t seed = 0;
  int trials = 20;
  double tol = 1e-8;
  bool json = false;
  bool text = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseError::Kind::Syntax, "cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::pair<std::string, std::string>> split_assignments(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw ParseError(ParseError::Kind::Syntax,
                       "expected 'vertex=value' assignments, got '" + item + "'");
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  if (out.empty())
    throw ParseError(ParseError::Kind::Syntax, "empty assignment list '" + text + "'");
  return out;
}

IntVec parse_int_assignments(const Quiver& q, const std::string& text, bool nonnegative) {
  IntVec v(q.vertex_count(), Int(0));
  for (const auto& [key, value] : split_assignments(text)) {
    int idx = q.vertex_index(key);
    if (idx < 0) throw ParseError(ParseError::Kind::UnknownVertex, "unknown vertex '" + key + "'");
    v[idx] = parse_int(value);
    if (nonnegative && v[idx] < 0)
      throw ParseError(ParseError::Kind::Syntax, "entry for '" + key + "' must be nonnegative");
  }
  return v;
}

RatVec parse_rat_assignments(const Quiver& q, const std::string& text) {
  RatVec v(q.vertex_count(), Rat(0));
  for (const auto& [key, value] : split_assignments(text)) {
    int idx = q.vertex_index(key);
    if (idx < 0) throw ParseError(ParseError::Kind::UnknownVertex, "unknown vertex '" + key + "'");
    v[idx] = parse_rational(value);
  }
  return v;
}

// Representation type syntax: "e:(c1,c2,...);e:(...)" with the components
// in vertex declaration order.
RepType parse_type(const Quiver& q, const std::string& text) {
  std::vector<std::pair<Int, IntVec>> pairs;
  std::string part;
  std::istringstream stream(text);
  while (std::getline(stream, part, ';')) {
    auto colon = part.find(':');
    if (colon == std::string::npos)
      throw ParseError(ParseError::Kind::Syntax,
                       "expected 'multiplicity:(entries)', got '" + part + "'");
    std::string mult = part.substr(0, colon);
    std::string vec = part.substr(colon + 1);
    auto strip = [](std::string& s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    };
    strip(mult);
    strip(vec);
    if (vec.size() < 2 || vec.front() != '(' || vec.back() != ')')
      throw ParseError(ParseError::Kind::Syntax, "expected parenthesized vector in '" + part + "'");
    IntVec beta;
    std::string entry;
    std::istringstream entries(vec.substr(1, vec.size() - 2));
    while (std::getline(entries, entry, ',')) {
      strip(entry);
      beta.push_back(parse_int(entry));
    }
    if (static_cast<int>(beta.size()) != q.vertex_count())
      throw ParseError(ParseError::Kind::Syntax,
                       "type part '" + part + "' has " + std::to_string(beta.size()) +
                           " entries, expected " + std::to_string(q.vertex_count()));
    pairs.emplace_back(parse_int(mult), std::move(beta));
  }
  if (pairs.empty()) throw ParseError(ParseError::Kind::Syntax, "empty representation type");
  return RepType::make(std::move(pairs));
}

struct LoadedInput {
  Quiver quiver;
  std::optional<IntVec> alpha;
  std::optional<RatVec> lambda;
};

LoadedInput load(const Options& opt) {
  QuiverFile file = parse_any(read_file(opt.input));
  LoadedInput in;
  in.quiver = std::move(file.quiver);
  if (!opt.alpha.empty())
    in.alpha = parse_int_assignments(in.quiver, opt.alpha, /*nonnegative=*/true);
  else
    in.alpha = std::move(file.alpha);
  if (!opt.lambda.empty())
    in.lambda = parse_rat_assignments(in.quiver, opt.lambda);
  else
    in.lambda = std::move(file.lambda);
  return in;
}

IntVec require_alpha(const LoadedInput& in) {
  if (!in.alpha)
    throw DomainError("no alpha given (use --alpha or an alpha block in the input)");
  return *in.alpha;
}

RatVec lambda_or_zero(const LoadedInput& in) {
  if (in.lambda) return *in.lambda;
  return RatVec(in.quiver.vertex_count(), Rat(0));
}

void emit(const Options& opt, std::ostream& out, const Json& doc,
          const std::string& text_report) {
  if (opt.json)
    out << doc.dump(2) << "\n";
  else
    out << text_report;
}

std::string vec_text(const IntVec& v) { return format_vector(v); }

// --- subcommand bodies -----------------------------------------------------

int cmd_forms(const Options& opt, std::ostream& out) {
  LoadedInput in = load(opt);
  FormsContext ctx(in.quiver);
  int k = ctx.vertex_count();

  Json doc = Json::object();
  doc["quiver"] = quiver_to_json(in.quiver, in.alpha, in.lambda);
  auto matrix = [&](auto&& get) {
    Json rows = Json::array();
    for (int i = 0; i < k; ++i) {
      Json row = Json::array();
      for (int j = 0; j < k; ++j) row.push_back(to_long(get(i, j)));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  doc["euler"] = matrix([&](int i, int j) { return ctx.euler(i, j); });
  doc["tits"] = matrix([&](int i, int j) { return ctx.tits(i, j); });
  if (in.alpha) {
    doc["chiAlphaAlpha"] = to_long(ctx.chi(*in.alpha, *in.alpha));
    doc["pAlpha"] = to_long(ctx.p(*in.alpha));
  } else {
    doc["chiAlphaAlpha"] = nullptr;
    doc["pAlpha"] = nullptr;
  }

  std::ostringstream text;
  text << "vertices:";
  for (const auto& v : in.quiver.vertices()) text << ' ' << v;
  text << "\neuler matrix:\n";
  for (int i = 0; i < k; ++i) {
    text << " ";
    for (int j = 0; j < k; ++j) text << ' ' << ctx.euler(i, j).get_str();
    text << "\n";
  }
  text << "tits matrix:\n";
  for (int i = 0; i < k; ++i) {
    text << " ";
    for (int j = 0; j < k; ++j) text << ' ' << ctx.tits(i, j).get_str();
    text << "\n";
  }
  if (in.alpha) {
    text << "chi(alpha,alpha) = " << ctx.chi(*in.alpha, *in.alpha).get_str() << "\n";
    text << "p(alpha) = " << ctx.p(*in.alpha).get_str() << "\n";
  }
  emit(opt, out, doc, text.str());
  return 0;
}

int cmd_roots(const Options& opt, std::ostream& out) {
  LoadedInput in = load(opt);
  IntVec box;
  if (!opt.box.empty())
    box = parse_int_assignments(in.quiver, opt.box, /*nonnegative=*/true);
  else if (in.alpha)
    box = *in.alpha;
  else
    throw DomainError("no box given (use --box, --alpha or an alpha block)");

  FormsContext ctx(in.quiver);
  RootSet roots = enumerate_roots(ctx, box);

  Json doc = Json::object();
  doc["box"] = vec_to_json(in.quiver, box);
  Json list = Json::array();
  std::ostringstream text;
  for (const auto& r : roots.roots) {
    Json obj = Json::object();
    obj["vector"] = vec_to_json(in.quiver, r.vector);
    obj["kind"] = r.kind == RootKind::Real ? "real" : "imaginary";
    obj["p"] = to_long(r.p);
    obj["indivisible"] = r.indivisible;
    list.push_back(std::move(obj));
    text << vec_text(r.vector) << ' ' << (r.kind == RootKind::Real ? "real" : "imaginary")
         << " p=" << r.p.get_str() << (r.indivisible ? " indivisible" : " divisible") << "\n";
  }
  doc["roots"] = std::move(list);
  emit(opt, out, doc, text.str());
  return 0;
}

int cmd_bracket(const Options& opt, std::ostream& out) {
  LoadedInput in = load(opt);
  DoubleQuiver dq = double_quiver(in.quiver);
  NecklaceWord w1 = parse_word(dq, opt.w1);
  NecklaceWord w2 = parse_word(dq, opt.w2);
  LieElement result = bracket(dq, w1, w2);

  Json doc = Json::object();
  Json terms = Json::array();
  for (const auto& [w, c] : result.terms()) {
    Json term = Json::object();
    term["coefficient"] = quiverlab::to_string(c);
    Json word = Json::array();
    for (int arrow : display_arrows(w)) word.push_back(dq.arrow_id(arrow));
    term["word"] = std::move(word);
    term["vertex"] = in.quiver.vertex_id(w.base_vertex());
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  emit(opt, out, doc, quiverlab::to_string(dq, result) + "\n");
  return 0;
}

int cmd_sigma(const Options& opt, std::ostream& out) {
  LoadedInput in = load(opt);
  RatVec lambda = lambda_or_zero(in);
  IntVec box;
  if (!opt.box.empty())
    box = parse_int_assignments(in.quiver, opt.box, /*nonnegative=*/true);
  else if (in.alpha)
    box = *in.alpha;
  else
    throw DomainError("no box given (use --box, --alpha or an alpha block)");
  IntVec alpha = in.alpha ? *in.alpha : IntVec(in.quiver.vertex_count(), Int(0));

  SigmaContext ctx(SigmaQuery::make(in.quiver, lambda, alpha, box));
  auto members = ctx.enumerate_sigma();

  Json doc = Json::object();
  doc["lambda"] = weights_to_json(in.quiver, lambda);
  doc["box"] = vec_to_json(in.quiver, box);
  Json list = Json::array();
  for (const auto& m : members) list.push_back(vec_to_json(in.quiver, m));
  doc["members"] = std::move(list);

  std::ostringstream text;
  for (const auto& m : members) text << vec_text(m) << "\n";
  if (in.alpha && !is_zero(*in.alpha)) {
    bool member = ctx.in_sigma(*in.alpha);
    bool minimal = member && ctx.is_minimal();
    doc["inSigma"] = member;
    doc["minimal"] = minimal;
    text << "alpha " << vec_text(*in.alpha) << (member ? " is" : " is not")
         << " in Sigma_lambda";
    if (member) text << (minimal ? " and is minimal" : " and is not minimal");
    text << "\n";
  } else {
    doc["inSigma"] = nullptr;
    doc["minimal"] = nullptr;
  }
  emit(opt, out, doc, text.str());
  return 0;
}

int cmd_types(const Options& opt, std::ostream& out) {
  LoadedInput in = load(opt);
  IntVec alpha = require_alpha(in);
  RatVec lambda = lambda_or_zero(in);
  SigmaContext ctx(SigmaQuery::make(in.quiver, lambda, alpha));

  Json doc = Json::object();
  doc["alpha"] = vec_to_json(in.quiver, alpha);
  doc["lambda"] = weights_to_json(in.quiver, lambda);

  std::vector<Stratum> strata;
  for (const auto& type : ctx.enumerate_types()) {
    Int dim = 0;
    for (const auto& [e, beta] : type.pairs) dim += 2 * ctx.forms().p(beta);
    strata.push_back(Stratum{type, dim, type.is_azumaya(alpha)});
  }
  std::sort(strata.begin(), strata.end(), [](const Stratum& a, const Stratum& b) {
    if (a.dimension != b.dimension) return a.dimension > b.dimension;
    return a.type < b.type;
  });

  Json list = Json::array();
  std::ostringstream text;
  for (const auto& s : strata) {
    Json obj = Json::object();
    obj["type"] = type_to_json(in.quiver, s.type);
    obj["dimension"] = to_long(s.dimension);
    obj["smooth"] = s.smooth;
    list.push_back(std::move(obj));

    bool first = true;
    for (const auto& [e, beta] : s.type.pairs) {
      text << (first ? "" : " + ") << e.get_str() << "x" << vec_text(beta);
      first = false;
    }
    text << "  dim=" << s.dimension.get_str() << (s.smooth ? "  [azumaya]" : "") << "\n";
  }
  doc["strata"] = std::move(list);
  emit(opt, out, doc, text.str());
  return 0;
}

int cmd_local(const Options& opt, std::ostream& out) {
  LoadedInput in = load(opt);
  IntVec alpha = require_alpha(in);
  RatVec lambda = lambda_or_zero(in);
  SigmaContext ctx(SigmaQuery::make(in.quiver, lambda, alpha));
  RepType type = parse_type(in.quiver, opt.type);
  LocalQuiverSetting setting = local_quiver(ctx, type);

  const Quiver& gamma = setting.gamma.base();
  Json doc = quiver_to_json(gamma, setting.alpha_tau);

  std::ostringstream text;
  text << "quiver { vertices";
  for (const auto& v : gamma.vertices()) text << ' ' << v;
  for (const auto& a : gamma.arrows())
    text << "  arrow " << a.id << ' ' << gamma.vertex_id(a.tail) << ' '
         << gamma.vertex_id(a.head);
  text << " }\nalpha";
  for (int i = 0; i < gamma.vertex_count(); ++i)
    text << ' ' << gamma.vertex_id(i) << '=' << setting.alpha_tau[i].get_str();
  text << "\n";
  emit(opt, out, doc, text.str());
  return 0;
}

int cmd_decide(const Options& opt, std::ostream& out, std::ostream& err) {
  LoadedInput in = load(opt);
  IntVec alpha = require_alpha(in);
  RatVec lambda = lambda_or_zero(in);
  std::optional<IntVec> box;
  if (!opt.box.empty()) box = parse_int_assignments(in.quiver, opt.box, true);

  SigmaContext ctx(SigmaQuery::make(in.quiver, lambda, alpha, box));
  DecisionReport report = decide(ctx);
  if (!report.type_count_consistent)
    err << "warning: alpha is not poset-minimal yet (1,alpha) is the only "
           "representation type; the reported booleans follow poset-minimality\n";
  Json doc = report_to_json(in.quiver, report);

  std::ostringstream text;
  text << "alpha " << vec_text(alpha) << (report.in_sigma ? " is" : " is not")
       << " in Sigma_lambda\n";
  text << "minimal:        " << (report.minimal ? "yes" : "no") << "\n";
  text << "coadjointOrbit: " << (report.coadjoint_orbit ? "yes" : "no") << "\n";
  text << "smoothQuotient: " << (report.smooth_quotient ? "yes" : "no") << "\n";
  text << "azumaya:        " << (report.azumaya ? "yes" : "no") << "\n";
  text << "alphaSmooth:    " << (report.alpha_smooth ? "yes" : "no") << "\n";
  if (report.dimension)
    text << "dimension:      " << report.dimension->get_str() << "\n";
  else
    text << "dimension:      (empty variety)\n";
  text << "strata (" << report.strata.size() << "):\n";
  for (const auto& s : report.strata) {
    text << "  ";
    bool first = true;
    for (const auto& [e, beta] : s.type.pairs) {
      text << (first ? "" : " + ") << e.get_str() << "x" << vec_text(beta);
      first = false;
    }
    text << "  dim=" << s.dimension.get_str() << (s.smooth ? "  [smooth]" : "") << "\n";
  }
  emit(opt, out, doc, text.str());
  return 0;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  LoadedInput in = load(opt);
  IntVec alpha = require_alpha(in);
  RatVec lambda = lambda_or_zero(in);
  SigmaQuery query = SigmaQuery::make(in.quiver, lambda, alpha);
  LabReport report = verify(query, opt.seed, opt.trials, opt.tol);
  Json doc = lab_to_json(report);

  std::ostringstream text;
  text << "converged:      " << (report.converged ? "yes" : "no") << "\n";
  text << "residual:       " << report.residual << "\n";
  text << "restarts used:  " << report.restarts_used << "\n";
  text << "ambient dim:    " << report.ambient_dimension << "\n";
  text << "expected rank:  " << report.expected_rank << "\n";
  if (report.jacobian_rank) {
    text << "jacobian rank:  " << *report.jacobian_rank << "\n";
    text << "fiber dim:      " << *report.fiber_dimension << "\n";
    text << "endo dim:       " << *report.endomorphism_dimension << "\n";
    text << "simple:         " << (*report.simple ? "yes" : "no") << "\n";
    text << "quotient est:   " << *report.quotient_estimate << "\n";
  }
  text << "verdict check:  " << report.verdict_check << "\n";
  if (report.verdict_check == "mismatch")
    err << "warning: numeric witness disagrees with the decision engine\n";
  emit(opt, out, doc, text.str());
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact and numeric toolkit for quiver moment maps, necklace "
               "brackets and smoothness of semisimple-representation quotients"};
  app.require_subcommand(1);
  app.fallthrough(false);

  auto add_common = [&](CLI::App* sub, bool with_lambda = true) {
    sub->add_option("input", opt.input, "quiver file (text format or JSON)")->required();
    sub->add_option("--alpha", opt.alpha, "dimension vector, e.g. v0=2,vinf=1");
    if (with_lambda) sub->add_option("--lambda", opt.lambda, "weights, e.g. v0=1,vinf=-2");
    auto* j = sub->add_flag("--json", opt.json, "machine-readable JSON output");
    sub->add_flag("--text", opt.text, "human-readable output (default)")->excludes(j);
    return sub;
  };

  auto* forms = add_common(app.add_subcommand("forms", "Euler and Tits forms, chi and p"));
  auto* roots = add_common(app.add_subcommand("roots", "positive roots within a box"));
  roots->add_option("--box", opt.box, "bounding box, e.g. v0=3,vinf=1");
  auto* brk = add_common(app.add_subcommand("bracket", "necklace Lie bracket of two words"));
  brk->add_option("--w1", opt.w1, "first necklace word, e.g. \"x x*\"")->required();
  brk->add_option("--w2", opt.w2, "second necklace word")->required();
  auto* sigma =
      add_common(app.add_subcommand("sigma", "members of Sigma_lambda within a box"));
  sigma->add_option("--box", opt.box, "bounding box, e.g. v0=3,vinf=3");
  auto* types_cmd =
      add_common(app.add_subcommand("types", "semisimple representation types of alpha"));
  auto* local =
      add_common(app.add_subcommand("local", "etale-local quiver setting of a type"));
  local->add_option("--type", opt.type, "representation type, e.g. \"2:(1,0);1:(0,1)\"")
      ->required();
  auto* decide_cmd =
      add_common(app.add_subcommand("decide", "five-way smoothness/minimality decision"));
  decide_cmd->add_option("--box", opt.box, "search box override");
  auto* verify_cmd =
      add_common(app.add_subcommand("verify", "numeric moment-map witness report"));
  verify_cmd->add_option("--seed", opt.seed, "random seed for Newton restarts");
  verify_cmd->add_option("--trials", opt.trials, "maximum Newton restarts");
  verify_cmd->add_option("--tol", opt.tol, "rank/residual tolerance");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (forms->parsed()) return cmd_forms(opt, out);
    if (roots->parsed()) return cmd_roots(opt, out);
    if (brk->parsed()) return cmd_bracket(opt, out);
    if (sigma->parsed()) return cmd_sigma(opt, out);
    if (types_cmd->parsed()) return cmd_types(opt, out);
    if (local->parsed()) return cmd_local(opt, out);
    if (decide_cmd->parsed()) return cmd_decide(opt, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, out, err);
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    if (opt.json) {
      Json j = Json::object();
      j["error"] = {{"kind", ParseError::kind_name(e.kind())},
                    {"message", e.what()},
                    {"line", e.line()},
                    {"column", e.column()}};
      err << j.dump(2) << "\n";
    } else {
      err << "error (" << ParseError::kind_name(e.kind()) << "): " << e.what();
      if (e.line() > 0) err << " at line " << e.line() << ", column " << e.column();
      err << "\n";
    }
    return 2;
  } catch (const DomainError& e) {
    if (opt.json) {
      Json j = Json::object();
      j["error"] = {{"kind", "domain"}, {"message", e.what()}};
      err << j.dump(2) << "\n";
    } else {
      err << "error (domain): " << e.what() << "\n";
    }
    return 1;
  } catch (const std::exception& e) {
    err << "error (internal): " << e.what() << "\n";
    return 1;
  }
}

}  // namespace quiverlab::cli
