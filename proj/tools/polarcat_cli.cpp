// Command-line front end: verification suites, normalization to dotted
// diagrams, rank queries and exact functor evaluation for polar morphism
// expressions.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "polarcat/morphism_text.hpp"
#include "polarcat/normalform.hpp"
#include "polarcat/ptl.hpp"
#include "polarcat/suites.hpp"
#include "polarcat/superlin.hpp"

using json = nlohmann::json;
using namespace polarcat;

namespace {

const char* err_name(Err e) {
  switch (e) {
    case Err::RankMismatch: return "RankMismatch";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::NonTermination: return "NonTermination";
    case Err::CutoffExceeded: return "CutoffExceeded";
    case Err::OddBoundary: return "OddBoundary";
    case Err::UnsupportedParameter: return "UnsupportedParameter";
    case Err::SolveUnderdetermined: return "SolveUnderdetermined";
    case Err::SyntaxError: return "SyntaxError";
    case Err::EmptySpace: return "EmptySpace";
    case Err::SingularForm: return "SingularForm";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::SpecializationMissing: return "SpecializationMissing";
  }
  return "Error";
}

json diagram_json(const BrauerDiagram& d) {
  json pairs = json::array();
  for (int a = 0; a < d.n(); ++a) {
    int b = d.mate[a];
    if (b > a) pairs.push_back({a + 1, b + 1});
  }
  return {{"bot", d.bot}, {"top", d.top}, {"pairs", pairs}};
}

json normalform_json(const NormalForm& nf,
                     const std::map<std::string, Rational>& bind) {
  json terms = json::array();
  for (auto& [d, c] : nf.terms) {
    Frac cv = bind.empty() ? c : c.specialize(bind);
    if (cv.is_zero()) continue;
    json dots = json::object();
    auto bump = [&](int label) {
      std::string key = std::to_string(label);
      dots[key] = (dots.contains(key) ? dots[key].get<int>() : 0) + 1;
    };
    for (int p : d.bdots) bump(p + 1);
    for (int q : d.tdots) bump(d.diagram.bot + q + 1);
    terms.push_back({{"diagram", diagram_json(d.diagram)},
                     {"dots", dots},
                     {"coeff", cv.to_string()}});
  }
  return {{"r", nf.r}, {"s", nf.s}, {"terms", terms}};
}

json ptl_json(const PtlElem& p, const std::map<std::string, Rational>& bind) {
  json terms = json::array();
  for (auto& [d, c] : p.terms) {
    Frac cv = bind.empty() ? c : c.specialize(bind);
    if (cv.is_zero()) continue;
    json conn = json::object();
    for (auto& [label, count] : d.marks)
      conn[std::to_string(label + 1)] = count;
    terms.push_back({{"planar", true},
                     {"diagram", diagram_json(d.diagram)},
                     {"connectors", conn},
                     {"coeff", cv.to_string()}});
  }
  return {{"r", p.r}, {"s", p.s}, {"terms", terms}};
}

std::map<std::string, Rational> delta_bind(const std::string& delta) {
  std::map<std::string, Rational> bind;
  if (delta != "symbolic") {
    Rational v(delta);
    v.canonicalize();
    bind["delta"] = v;
  }
  return bind;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polar Brauer / Temperley-Lieb category toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after a subcommand too

  bool as_json = false;
  std::string delta = "symbolic";
  long budget = -1;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--delta", delta, "rational value for delta, or 'symbolic'");
  app.add_option("--budget", budget,
                 "rewrite-step budget (default: REWRITE_BUDGET env)");

  auto* verify = app.add_subcommand("verify", "run a relation suite");
  std::string suite;
  verify->add_option("suite", suite, "brauer|polar|ptl|osp|uea|g2|all")
      ->required();

  auto* norm = app.add_subcommand("normalize", "normal form of an expression");
  std::string norm_expr;
  bool norm_ptl = false;
  norm->add_option("expr", norm_expr, "morphism expression")->required();
  norm->add_flag("--ptl", norm_ptl, "project to the Temperley-Lieb quotient");

  auto* rank = app.add_subcommand("rank", "hom-space rank");
  bool rank_ptl = false;
  int rank_r = 0, rank_s = 0;
  rank->add_flag("--ptl", rank_ptl, "planar quotient rank");
  rank->add_option("r", rank_r, "bottom rank")->required();
  rank->add_option("s", rank_s, "top rank")->required();

  auto* eval = app.add_subcommand("eval", "evaluate under a representation");
  std::string rep_str, verma_str;
  int cutoff = 10;
  std::string eval_expr;
  eval->add_option("--rep", rep_str, "m,k for osp(m|k), k even")->required();
  eval->add_option("--verma", verma_str,
                   "highest weight of a truncated osp(0|2) Verma pole");
  eval->add_option("--cutoff", cutoff, "Verma window size");
  eval->add_option("expr", eval_expr, "morphism expression")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      auto results = run_suite(suite);
      bool all = true;
      for (auto& r : results) {
        all = all && r.pass;
        json line = {{"suite", r.suite}, {"check", r.check}, {"pass", r.pass}};
        std::cout << line.dump() << "\n";
      }
      return all ? 0 : 1;
    }
    if (*norm) {
      auto bind = delta_bind(delta);
      PolarElem e = ast_to_elem(parse_morphism(norm_expr));
      if (norm_ptl) {
        std::cout << ptl_json(project_ptl(e, budget), bind).dump(2) << "\n";
      } else {
        std::cout << normalform_json(normalize(e, budget), bind).dump(2)
                  << "\n";
      }
      return 0;
    }
    if (*rank) {
      long v = rank_ptl ? ptl_rank(rank_r, rank_s)
                        : brauer_rank(rank_r, rank_s);
      if (as_json) {
        json out = {
            {"r", rank_r}, {"s", rank_s}, {"ptl", rank_ptl}, {"rank", v}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << v << "\n";
      }
      return 0;
    }
    if (*eval) {
      auto comma = rep_str.find(',');
      if (comma == std::string::npos)
        throw CatError(Err::SyntaxError, "--rep wants 'm,k'");
      int m = std::stoi(rep_str.substr(0, comma));
      int k = std::stoi(rep_str.substr(comma + 1));
      if (k % 2)
        throw CatError(Err::UnsupportedParameter,
                       "odd part of osp(m|k) must be even");
      RepCtx ctx;
      if (!verma_str.empty()) {
        if (m != 0 || k != 2)
          throw CatError(Err::UnsupportedParameter,
                         "Verma poles exist for osp(0|2) only");
        Rational lam(verma_str);
        lam.canonicalize();
        ctx = verma_rep_ctx(lam, cutoff);
      } else {
        ctx = osp_rep_ctx(m, k / 2);
      }
      PolarElem e = ast_to_elem(parse_morphism(eval_expr));
      QMat M;
      if (ctx.is_verma) {
        // window: only columns whose Verma level keeps every connector
        // application inside the cutoff
        int maxdots = 0;
        for (auto& [w, c] : e.terms)
          maxdots = std::max(maxdots, w.dot_count());
        long stride = 1;
        for (int i = 0; i < e.r; ++i) stride *= ctx.osp.dim();
        std::vector<int> cols;
        for (long x = 0; x < (long)ctx.dim_m * stride; ++x)
          if (x / stride + maxdots <= cutoff) cols.push_back((int)x);
        M = functor_eval_columns(ctx, e, cols);
      } else {
        M = functor_eval(ctx, e);
      }
      if (as_json) {
        json rows = json::array();
        for (int i = 0; i < M.rows; ++i) {
          json row = json::array();
          for (int j = 0; j < M.cols; ++j) row.push_back(rat_str(M(i, j)));
          rows.push_back(row);
        }
        json out = {{"rows", M.rows}, {"cols", M.cols}, {"entries", rows}};
        std::cout << out.dump() << "\n";
      } else {
        for (int i = 0; i < M.rows; ++i) {
          for (int j = 0; j < M.cols; ++j)
            std::cout << (j ? " " : "") << rat_str(M(i, j));
          std::cout << "\n";
        }
      }
      return 0;
    }
  } catch (const CatError& err) {
    std::cerr << err_name(err.kind()) << ": " << err.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
