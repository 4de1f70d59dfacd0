#ifndef FRAMEKIT_CLI_HPP_
#define FRAMEKIT_CLI_HPP_

// Command-line front end. run() parses a token list, dispatches to the
// library and writes a JSON report. Exit codes: 0 success, 1 I/O or parse
// failure (including unknown flags), 2 a mathematical precondition failed.
//
// -o receives the primary output: the produced pair document for commands
// that build a new pair (construct, dual, extend, convert, ovf dual/dilate,
// pframe dual), otherwise the report itself.

#include "framekit/analysis.hpp"
#include "framekit/io.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace framekit::cli {

using io::ordered_json;

namespace detail {

struct Options {
  std::uint64_t seed = 0;
  int samples = 1000;
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  std::string output;
  Tolerance tol() const { return {abs_tol, rel_tol}; }
};

struct Outcome {
  ordered_json report;
  std::optional<io::json> produced;  // pair document for -o
};

inline ordered_json frame_report(const FrameReport& r) {
  return ordered_json{{"self_adjoint", r.self_adjoint}, {"psd", r.psd},         {"invertible", r.invertible},
                      {"is_bessel", r.is_bessel},       {"is_frame", r.is_frame}, {"lower_a", io::num(r.lower_a)},
                      {"upper_b", io::num(r.upper_b)},  {"tight", r.tight},     {"parseval", r.parseval}};
}

inline ordered_json frame_summary(const FramePair& fp) {
  ordered_json out{{"field", field_name(fp.field)}, {"dim", fp.dim()}, {"count", fp.count()}};
  return out;
}

inline ordered_json certificate(const PerturbCertificate& c) {
  ordered_json out{{"kind", perturb_kind_name(c.kind)},
                   {"hypothesis_ok", c.hypothesis_ok},
                   {"predicted_lower", io::num(c.predicted_lower)},
                   {"predicted_upper", io::num(c.predicted_upper)},
                   {"actual_is_frame", c.actual_is_frame},
                   {"actual_lower", io::num(c.actual_lower)},
                   {"actual_upper", io::num(c.actual_upper)},
                   {"window_ok", c.window_ok}};
  if (c.kind == PerturbKind::SampledLinear || c.kind == PerturbKind::SampledBessel) {
    out["evidence"] = "sampled falsifier: hypothesis_ok means no violation was found";
    out["counterexample"] = c.counterexample ? io::num(*c.counterexample, Field::Complex) : ordered_json(nullptr);
  }
  return out;
}

inline ordered_json as_ordered(const io::json& doc) { return ordered_json::parse(doc.dump()); }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Outcome;
  detail::Options opt;
  CLI::App app{"framekit: frames, operator-valued frames and p-frames in finite dimension", "framekit"};
  app.require_subcommand(1);
  app.add_option("--seed", opt.seed, "seed for sampled estimates");
  app.add_option("--samples", opt.samples, "random samples for sampled estimates")->check(CLI::NonNegativeNumber);
  app.add_option("--abs-tol", opt.abs_tol, "absolute tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--rel-tol", opt.rel_tol, "relative tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("-o,--output", opt.output, "output path");

  std::function<Outcome()> action;
  std::string command;
  auto leaf = [&](CLI::App* sub, std::string name, std::function<Outcome()> fn) {
    sub->fallthrough();
    sub->callback([&action, &command, name, fn] {
      command = name;
      action = fn;
    });
  };
  auto load_frame = [&](const std::string& path) { return io::frame_from_json(io::parse_text(io::read_file(path)), opt.tol()); };
  auto load_ovf = [&](const std::string& path) { return io::ovf_from_json(io::parse_text(io::read_file(path)), opt.tol()); };
  auto load_pframe = [&](const std::string& path) {
    return io::pframe_from_json(io::parse_text(io::read_file(path)), opt.tol());
  };

  // verify
  std::string file, other;
  auto* verify_cmd = app.add_subcommand("verify", "frame bounds and flags of a frame pair");
  verify_cmd->add_option("file", file, "frame pair document")->required();
  leaf(verify_cmd, "verify", [&] {
    const auto fp = load_frame(file);
    Outcome o;
    o.report = detail::frame_summary(fp);
    o.report["theorem"] = "optimal frame bounds are the extreme eigenvalues of the frame operator";
    o.report.update(detail::frame_report(verify(fp)));
    const auto ev = spectral(frame_operator(fp), fp.tol).eigenvalues;
    o.report["frame_operator_eigenvalues"] = io::num(Vec(Eigen::Map<const Vec>(ev.data(), static_cast<Eigen::Index>(ev.size()))), Field::Complex);
    return o;
  });

  // dual
  auto* dual_cmd = app.add_subcommand("dual", "canonical dual of a frame pair");
  dual_cmd->add_option("file", file, "frame pair document")->required();
  dual_cmd->add_option("--check", other, "report the duality relation against this pair instead");
  leaf(dual_cmd, "dual", [&] {
    const auto fp = load_frame(file);
    Outcome o;
    o.report = detail::frame_summary(fp);
    if (!other.empty()) {
      const auto gq = load_frame(other);
      o.report["theorem"] = "dual and orthogonal frame pairs";
      o.report["is_dual"] = is_dual(fp, gq);
      o.report["is_orthogonal"] = is_orthogonal(fp, gq);
      return o;
    }
    const auto dual = canonical_dual(fp);
    o.report["theorem"] = "canonical dual and its frame bounds";
    o.report["is_dual"] = is_dual(fp, dual);
    o.report["dual_report"] = detail::frame_report(verify(dual));
    o.produced = io::frame_to_json(dual);
    return o;
  });

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Riesz / orthonormal frame classification");
  classify_cmd->add_option("file", file, "frame pair document")->required();
  classify_cmd->add_option("--similar", other, "also test similarity against this pair");
  leaf(classify_cmd, "classify", [&] {
    const auto fp = load_frame(file);
    const auto c = classify(fp);
    Outcome o;
    o.report = detail::frame_summary(fp);
    o.report["theorem"] = "frame idempotent characterization of Riesz and orthonormal frames";
    o.report["riesz_frame"] = c.riesz_frame;
    o.report["orthonormal_frame"] = c.orthonormal_frame;
    o.report["cross_gram"] = io::num(c.cross_gram, fp.field);
    if (!other.empty()) {
      const auto sim = similarity_detect(fp, load_frame(other));
      o.report["similar"] = sim.has_value();
      if (sim) {
        o.report["similarity_x"] = io::num(sim->txy, fp.field);
        o.report["similarity_tau"] = io::num(sim->ttw, fp.field);
      }
    }
    return o;
  });

  // construct
  auto* construct = app.add_subcommand("construct", "build tight frames");
  construct->require_subcommand(1);
  construct->fallthrough();
  int k = 0, l = 0;
  auto* circular = construct->add_subcommand("circular", "unit vectors at angles 2 pi j / k and 2 pi j / l");
  circular->add_option("--k", k)->required();
  circular->add_option("--l", l)->required();
  leaf(circular, "construct circular", [&] {
    const auto r = circular_kl(k, l, opt.tol());
    Outcome o;
    o.report = detail::frame_summary(r.fp);
    o.report["theorem"] = "tight frames from points on the circle";
    o.report["tight"] = r.tight;
    o.report["constant"] = io::num(r.constant);
    o.report["residual"] = io::num(Vec(r.residual.cast<cplx>()), Field::Real);
    o.produced = io::frame_to_json(r.fp);
    return o;
  });
  std::string table, xs, taus;
  auto* group = construct->add_subcommand("group", "orbit of generators under the left regular representation");
  group->add_option("--table", table, "group table document")->required();
  group->add_option("--x", xs, "generator x (JSON array or file)")->required();
  group->add_option("--tau", taus, "generator tau (JSON array or file)")->required();
  leaf(group, "construct group", [&] {
    const auto g = io::group_from_json(io::parse_text(io::read_file(table)));
    const auto rep = left_regular(g, opt.tol());
    const auto gf = group_frame(rep, io::vector_from_text(xs, Field::Complex), io::vector_from_text(taus, Field::Complex));
    Outcome o;
    o.report = detail::frame_summary(gf.fp);
    o.report["theorem"] = "frame generators of a unitary group representation";
    o.report.update(detail::frame_report(gf.report));
    o.report["generator_bound_ok"] = io::opt(gf.generator_bound_ok);
    o.report["invariant"] = check_group_invariance(gf.fp, g);
    o.produced = io::frame_to_json(gf.fp);
    return o;
  });

  // analyze
  auto* analyze = app.add_subcommand("analyze", "algorithms and certificates on frame pairs");
  analyze->require_subcommand(1);
  analyze->fallthrough();

  int steps = 10;
  std::string hvec;
  auto* recon = analyze->add_subcommand("reconstruct", "frame algorithm iterates toward h");
  recon->add_option("file", file)->required();
  recon->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
  recon->add_option("--target", hvec, "target vector h (JSON array or file); default all ones");
  leaf(recon, "analyze reconstruct", [&] {
    const auto fp = load_frame(file);
    const Vec h = hvec.empty() ? Vec(Vec::Ones(fp.dim())) : io::vector_from_text(hvec, fp.field);
    const auto tr = iterate_reconstruct(fp, h, steps);
    Outcome o;
    o.report = detail::frame_summary(fp);
    o.report["theorem"] = "frame algorithm with relaxation 2/(a+b)";
    o.report["lower_a"] = io::num(tr.lower_a);
    o.report["upper_b"] = io::num(tr.upper_b);
    ordered_json rows = ordered_json::array();
    for (std::size_t n = 0; n < tr.errors.size(); ++n)
      rows.push_back(ordered_json{{"step", n},
                                  {"error", io::num(tr.errors[n])},
                                  {"bound", io::num(tr.bound_curve[n])},
                                  {"iterate", io::num(tr.iterates[n], fp.field)}});
    o.report["steps"] = rows;
    return o;
  });

  double lambda = 0.0;
  bool minimal = false;
  auto* extend = analyze->add_subcommand("extend", "extend to a tight frame");
  extend->add_option("file", file)->required();
  auto* lambda_opt = extend->add_option("--lambda", lambda, "target tight constant");
  auto* minimal_opt = extend->add_flag("--minimal", minimal, "append the fewest vectors (x = tau only)");
  lambda_opt->excludes(minimal_opt);
  leaf(extend, "analyze extend", [&, lambda_opt] {
    const auto fp = load_frame(file);
    if (lambda_opt->count() == 0 && !minimal)
      throw Error(ErrorKind::ParseError, "one of --lambda or --minimal is required");
    const auto ext = minimal ? extend_tight_minimal(fp) : extend_tight_append(fp, lambda);
    Outcome o;
    o.report = detail::frame_summary(fp);
    o.report["theorem"] = minimal ? "minimal tight extension of a self-dual frame" : "tight extension by (lambda I - S)^(1/2)";
    o.report["appended"] = ext.count() - fp.count();
    o.report["extended_report"] = detail::frame_report(verify(ext));
    o.produced = io::frame_to_json(ext);
    return o;
  });

  auto* span = analyze->add_subcommand("span", "frame verdict from mixed spanning selections");
  span->add_option("file", file)->required();
  leaf(span, "analyze span", [&] {
    const auto fp = load_frame(file);
    const auto r = span_characterization(fp);
    Outcome o;
    o.report = detail::frame_summary(fp);
    o.report["theorem"] = "spanning characterization of frame pairs";
    o.report["is_frame"] = r.is_frame;
    if (r.witness) {
      ordered_json w = ordered_json::array();
      for (bool t : *r.witness) w.push_back(t ? "tau" : "x");
      o.report["witness"] = w;
    } else {
      o.report["witness"] = nullptr;
    }
    o.report["eigen_verdict"] = verify(fp).is_frame;
    return o;
  });

  std::string mtext;
  auto* formulas = analyze->add_subcommand("formulas", "trace, variation and dimension identities");
  formulas->add_option("file", file)->required();
  formulas->add_option("--matrix", mtext, "M for the trace formula, as rows (JSON or file); needs a Parseval pair");
  leaf(formulas, "analyze formulas", [&] {
    const auto fp = load_frame(file);
    const auto r = formulas_report(fp);
    Outcome o;
    o.report = detail::frame_summary(fp);
    o.report["theorem"] = "trace, variation and dimension formulas";
    o.report["trace_S"] = io::num(r.trace_s);
    o.report["sum_inner"] = io::num(r.sum_inner);
    o.report["trace_ok"] = r.trace_ok;
    o.report["trace_S2"] = io::num(r.trace_s2);
    o.report["double_sum"] = io::num(r.double_sum);
    o.report["trace_S2_ok"] = r.trace_s2_ok;
    o.report["variation_ok"] = io::opt(r.variation_ok);
    o.report["dim_formula_ok"] = io::opt(r.dim_formula_ok);
    o.report["equal_diag_b"] = io::opt(r.equal_diag_b);
    o.report["equal_diag_ok"] = io::opt(r.equal_diag_ok);
    if (!mtext.empty()) {
      const auto t = trace_formula(fp, io::matrix_from_text(mtext, Field::Complex, false));
      o.report["trace_formula"] = ordered_json{
          {"lhs", io::num(t.lhs)}, {"rhs", io::num(t.rhs)}, {"mirrored", io::num(t.mirrored)}, {"ok", t.ok}};
    }
    return o;
  });

  std::string kind = "quadratic", ytext;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  auto* perturb = analyze->add_subcommand("perturb", "perturbation certificates for (Y, T)");
  perturb->add_option("file", file)->required();
  perturb->add_option("--kind", kind)->check(CLI::IsMember({"quadratic", "normsum", "linear", "bessel"}));
  perturb->add_option("--y", ytext, "perturbed columns y_j (JSON array of columns or file)")->required();
  perturb->add_option("--alpha", alpha);
  perturb->add_option("--beta", beta);
  perturb->add_option("--gamma", gamma);
  leaf(perturb, "analyze perturb", [&] {
    const auto fp = load_frame(file);
    const Mat y = io::matrix_from_text(ytext, Field::Complex);
    PerturbCertificate c;
    if (kind == "quadratic") {
      c = perturb_quadratic(fp, y);
    } else if (kind == "normsum") {
      c = perturb_normsum(fp, y);
    } else {
      const SampledParams prm{alpha, beta, gamma, opt.samples, opt.seed};
      c = perturb_sampled(fp, y, kind == "linear" ? PerturbKind::SampledLinear : PerturbKind::SampledBessel, prm);
    }
    Outcome o;
    o.report = detail::frame_summary(fp);
    o.report["theorem"] = kind == "quadratic" ? "perturbation by sum ||x_j - y_j|| ||S^-1 tau_j|| < 1"
                          : kind == "normsum" ? "perturbation by sum ||x_j - y_j||^2 < ||theta_tau S^-1||^-2"
                                              : "perturbation under (alpha, beta, gamma) inequalities";
    o.report.update(detail::certificate(c));
    return o;
  });

  bool to_complex = false, to_real = false;
  auto* convert = analyze->add_subcommand("convert", "move a pair between the real and complex fields");
  convert->add_option("file", file)->required();
  auto* tc = convert->add_flag("--to-complex", to_complex);
  auto* tr = convert->add_flag("--to-real", to_real);
  tc->excludes(tr);
  leaf(convert, "analyze convert", [&] {
    const auto fp = load_frame(file);
    if (!to_complex && !to_real) throw Error(ErrorKind::ParseError, "one of --to-complex or --to-real is required");
    const auto res = to_complex ? real_to_complex(fp) : complex_to_real(fp);
    Outcome o;
    o.report = detail::frame_summary(fp);
    o.report["theorem"] = to_complex ? "real frames remain frames over C" : "real and imaginary parts form a real frame";
    o.report["converted"] = detail::frame_summary(res);
    o.report["converted_report"] = detail::frame_report(verify(res));
    o.produced = io::frame_to_json(res);
    return o;
  });

  // pframe
  auto* pframe = app.add_subcommand("pframe", "frames on l^p");
  pframe->require_subcommand(1);
  pframe->fallthrough();
  auto* pverify = pframe->add_subcommand("verify", "resolvent condition and bound intervals");
  pverify->add_option("file", file)->required();
  leaf(pverify, "pframe verify", [&] {
    const auto pf = load_pframe(file);
    const auto r = p_verify(pf, opt.samples, opt.seed);
    Outcome o;
    o.report = ordered_json{{"field", field_name(pf.field)}, {"p", io::num(pf.p)}, {"dim", pf.dim()}, {"count", pf.count()}};
    o.report["theorem"] = "p-frame bounds through the principal power S^(1/p)";
    o.report["resolvent_ok"] = r.resolvent_ok;
    o.report["tight"] = r.tight;
    o.report["parseval"] = r.parseval;
    o.report["lower_a"] = io::opt(r.lower_a);
    o.report["upper_b"] = io::opt(r.upper_b);
    return o;
  });
  auto* pdual = pframe->add_subcommand("dual", "canonical p-dual");
  pdual->add_option("file", file)->required();
  leaf(pdual, "pframe dual", [&] {
    const auto pf = load_pframe(file);
    const auto d = p_canonical_dual(pf);
    Outcome o;
    o.report = ordered_json{{"field", field_name(pf.field)}, {"p", io::num(pf.p)}, {"dim", pf.dim()}, {"count", pf.count()}};
    o.report["theorem"] = "canonical dual of a p-frame";
    o.report["is_dual"] = d.is_dual;
    o.produced = io::pframe_to_json(d.dual);
    return o;
  });
  std::string base_text;
  double p = 2.0;
  auto* pw = pframe->add_subcommand("paley-wiener", "Riesz p-basis test around a p-orthonormal base");
  pw->add_option("--base", base_text, "base columns (JSON array of columns or file)")->required();
  pw->add_option("--y", ytext, "perturbed columns")->required();
  pw->add_option("--p", p)->required();
  leaf(pw, "pframe paley-wiener", [&] {
    const Mat base = io::matrix_from_text(base_text, Field::Complex);
    const Mat y = io::matrix_from_text(ytext, Field::Complex);
    const auto r = paley_wiener_check(base, y, p, opt.samples, opt.seed, opt.tol());
    Outcome o;
    o.report = ordered_json{{"p", io::num(p)}, {"dim", base.rows()}, {"count", base.cols()}};
    o.report["theorem"] = "Paley-Wiener perturbation of a p-orthonormal basis";
    o.report["lambda_upper"] = io::num(r.lambda_upper);
    o.report["concluded"] = r.concluded;
    o.report["riesz"] = io::opt(r.riesz);
    return o;
  });
  std::string xv, yv;
  auto* fl = pframe->add_subcommand("fourlaws", "4-inequality, 4-parallelogram law and l^4 line projection");
  fl->add_option("--x", xv)->required();
  fl->add_option("--y", yv)->required();
  leaf(fl, "pframe fourlaws", [&] {
    const Vec x = io::vector_from_text(xv, Field::Complex), y = io::vector_from_text(yv, Field::Complex);
    const auto r = four_laws_check(x, y, opt.tol());
    Outcome o;
    o.report["theorem"] = "4-inequality and 4-parallelogram law in l^4";
    o.report["ineq4_lhs"] = io::num(r.ineq4_lhs);
    o.report["ineq4_rhs"] = io::num(r.ineq4_rhs);
    o.report["ineq4_ok"] = r.ineq4_ok;
    o.report["pl4_lhs"] = io::num(r.pl4_lhs);
    o.report["pl4_rhs"] = io::num(r.pl4_rhs);
    o.report["pl4_ok"] = r.pl4_ok;
    if (is_real_valued(x) && is_real_valued(y) && y.norm() > 0.0) {
      const auto pr = project_line_l4(x, y, opt.tol());
      o.report["projection"] = ordered_json{{"t_star", io::num(pr.t_star)}, {"dist", io::num(pr.dist)}};
    }
    return o;
  });
  auto* bf = pframe->add_subcommand("formulas", "dimension and trace formulas of a Parseval p-pair");
  bf->add_option("file", file)->required();
  bf->add_option("--matrix", mtext, "M as rows (JSON or file)");
  leaf(bf, "pframe formulas", [&] {
    const auto pf = load_pframe(file);
    std::optional<Mat> m;
    if (!mtext.empty()) m = io::matrix_from_text(mtext, Field::Complex, false);
    const auto r = banach_formulas(pf, m);
    Outcome o;
    o.report = ordered_json{{"field", field_name(pf.field)}, {"p", io::num(pf.p)}, {"dim", pf.dim()}, {"count", pf.count()}};
    o.report["theorem"] = "dimension and trace formulas for Parseval p-frames";
    o.report["dim_sum"] = io::num(r.dim_sum);
    o.report["dim_ok"] = r.dim_ok;
    o.report["trace_lhs"] = io::opt(r.trace_lhs);
    o.report["trace_rhs"] = io::opt(r.trace_rhs);
    o.report["trace_ok"] = io::opt(r.trace_ok);
    return o;
  });

  // ovf
  auto* ovf = app.add_subcommand("ovf", "operator-valued frame pairs");
  ovf->require_subcommand(1);
  ovf->fallthrough();
  auto ovf_summary = [](const OvfPair& op) {
    ordered_json s{{"field", field_name(op.field)}, {"m", op.m}, {"n", op.count()}};
    if (const auto d = op.uniform_codomain(); d > 0) {
      s["d"] = d;
    } else {
      ordered_json ds = ordered_json::array();
      for (Eigen::Index j = 0; j < op.count(); ++j) ds.push_back(op.codomain(j));
      s["d"] = ds;
    }
    return s;
  };
  auto ovf_report = [](const OvfReport& r) {
    ordered_json j = detail::frame_report(r.frame);
    j["riesz_ovf"] = r.riesz_ovf;
    j["orthonormal_ovf"] = r.orthonormal_ovf;
    return j;
  };
  auto* ovf_verify = ovf->add_subcommand("verify", "operator-valued frame bounds and flags");
  ovf_verify->add_option("file", file)->required();
  leaf(ovf_verify, "ovf verify", [&] {
    const auto op = load_ovf(file);
    Outcome o;
    o.report = ovf_summary(op);
    o.report["theorem"] = "operator-valued frame bounds from sum Psi_j^* A_j";
    o.report.update(ovf_report(verify_ovf(op)));
    return o;
  });
  auto* ovf_dual = ovf->add_subcommand("dual", "canonical dual of an operator-valued frame");
  ovf_dual->add_option("file", file)->required();
  leaf(ovf_dual, "ovf dual", [&] {
    const auto op = load_ovf(file);
    const auto d = canonical_dual_ovf(op);
    const auto rel = duality_relation(op, d);
    Outcome o;
    o.report = ovf_summary(op);
    o.report["theorem"] = "canonical dual of an operator-valued frame";
    o.report["is_dual"] = rel.dual;
    o.report["dual_report"] = ovf_report(verify_ovf(d));
    o.produced = io::ovf_to_json(d);
    return o;
  });
  auto* ovf_dilate = ovf->add_subcommand("dilate", "orthonormal dilation of a Parseval operator-valued frame");
  ovf_dilate->add_option("file", file)->required();
  leaf(ovf_dilate, "ovf dilate", [&] {
    const auto op = load_ovf(file);
    const auto d = dilate_ovf(op);
    Outcome o;
    o.report = ovf_summary(op);
    o.report["theorem"] = "dilation of a Parseval operator-valued frame";
    o.report["dilated"] = ovf_summary(d);
    o.report["dilated_report"] = ovf_report(verify_ovf(d));
    o.produced = io::ovf_to_json(d);
    return o;
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "framekit: " << e.what() << "\n";
    return 1;
  }

  auto emit = [&](const ordered_json& report) { out << report.dump(2) << "\n"; };

  ordered_json report{{"command", command}};
  try {
    Outcome o = action();
    report["status"] = "ok";
    report.update(o.report);
    if (!opt.output.empty()) {
      if (o.produced) {
        io::write_file(opt.output, o.produced->dump(2) + "\n");
        report["written"] = opt.output;
      } else {
        io::write_file(opt.output, report.dump(2) + "\n");
        return 0;
      }
    } else if (o.produced) {
      report["result"] = detail::as_ordered(*o.produced);
    }
    emit(report);
    return 0;
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = e.name();
    report["message"] = e.what();
    emit(report);
    err << "framekit: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::IoError ? 1 : 2;
  }
}

}  // namespace framekit::cli

#endif  // FRAMEKIT_CLI_HPP_
