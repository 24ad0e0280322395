#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nablalmo/alexander.hpp"
#include "nablalmo/errors.hpp"
#include "nablalmo/fixtures.hpp"
#include "nablalmo/gaussian.hpp"
#include "nablalmo/io.hpp"
#include "nablalmo/mmr.hpp"
#include "nablalmo/seifert.hpp"
#include "nablalmo/surgery.hpp"
#include "nablalmo/text.hpp"
#include "nablalmo/wheels.hpp"

namespace nablalmo::cli {

namespace {

int default_order() {
  if (const char* env = std::getenv("NABLA_LMO_ORDER")) {
    const std::string s(env);
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        s.size() < 6) {
      return std::stoi(s);
    }
    throw ParseError("NABLA_LMO_ORDER must be a non-negative integer, got '" + s + "'");
  }
  return kDefaultOrder;
}

std::string matrix_row(const QMatrix& m, std::size_t i) {
  std::string s = "[";
  for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + to_string(m(i, j));
  return s + "]";
}

void print_labeled(std::ostream& out, const std::vector<std::string>& labels, const QMatrix& m) {
  if (labels.empty()) {
    out << "  (empty)\n";
    return;
  }
  for (std::size_t i = 0; i < labels.size(); ++i) out << "  " << labels[i] << ": " << matrix_row(m, i) << "\n";
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

SeifertInput load_seifert(const std::string& file, const std::string& fixture) {
  if (!fixture.empty()) {
    try {
      const Fixture& f = find_fixture(fixture);
      return {f.seifert, f.components, f.name};
    } catch (const std::out_of_range& e) {
      throw ParseError(e.what());
    }
  }
  if (file.empty()) throw ParseError("one of --seifert or --fixture is required");
  return read_seifert_file(file);
}

// Reads an expression either inline or from a file of that name.
std::string expression_or_file(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_text_file(arg);
  return arg;
}

Integer positive_integer(const std::string& text, const std::string& what) {
  const Rational r = parse_rational(text);
  if (!is_integer(r) || r <= 0) throw ParseError(what + " must be a positive integer, got '" + text + "'");
  return r.get_num();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alexander polynomial, strut/wheel calculus and LMO wheel data of rank-one 3-manifolds", "nablalmo"};
  app.require_subcommand(1);
  std::function<int()> action;

  int order = kDefaultOrder;
  try {
    order = default_order();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  // nabla
  std::string seifert_file, fixture_name;
  std::optional<int> components;
  std::string manifold_h1;
  auto* nabla = app.add_subcommand("nabla", "Conway-normalized Alexander polynomial from a Seifert matrix");
  nabla->add_option("--seifert", seifert_file, "Seifert matrix JSON file");
  nabla->add_option("--fixture", fixture_name, "built-in fixture name (see `fixtures list`)");
  nabla->add_option("--components", components, "number of link components (overrides the file)");
  nabla->add_option("--manifold-h1", manifold_h1,
                    "treat V as a 0-framed knot in M with this |H_1(M)| and report nabla of the surgered manifold");
  nabla->callback([&] {
    action = [&] {
      SeifertInput in = load_seifert(seifert_file, fixture_name);
      const int l = components.value_or(in.components);
      if (!in.name.empty()) out << "name: " << in.name << "\n";
      out << "components: " << l << "\n";
      if (!manifold_h1.empty()) {
        if (l != 1) throw ParseError("--manifold-h1 needs a knot (components = 1)");
        const ManifoldNabla mn = nabla_manifold(in.seifert, positive_integer(manifold_h1, "--manifold-h1"));
        out << "nabla(z) = " << to_string(mn.nabla.z_form) << "\n";
        out << "nabla(t) = " << to_string(mn.nabla.polynomial) << "\n";
        out << "torsion order = " << mn.torsion_order.get_str() << "\n";
        out << "normalized (nabla(1) = 1): " << (mn.normalized ? "yes" : "no") << "\n";
        out << "symmetric: " << (mn.symmetric ? "yes" : "no") << "\n";
        return kOk;
      }
      const NablaResult r = nabla_from_seifert(in.seifert, l);
      out << "nabla(z) = " << to_string(r.z_form) << "\n";
      out << "nabla(t) = " << to_string(r.polynomial) << "\n";
      if (r.value_at_one) out << "nabla(1) = " << to_string(*r.value_at_one) << "\n";
      return kOk;
    };
  });

  // normalize-delta
  std::string delta_text, h1_text = "1";
  auto* normalize = app.add_subcommand("normalize-delta", "normalize an Alexander polynomial of a knot to nabla");
  normalize->add_option("--delta", delta_text, "polynomial in t, e.g. \"t^2 - t + 1\"")->required();
  normalize->add_option("--h1", h1_text, "order of H_1 of the ambient rational homology sphere");
  normalize->callback([&] {
    action = [&] {
      const DeltaNormalization d = normalize_delta(parse_half_laurent(delta_text), positive_integer(h1_text, "--h1"));
      out << "nabla(z) = " << to_string(d.nabla.z_form) << "\n";
      out << "nabla(t) = " << to_string(d.nabla.polynomial) << "\n";
      out << "shift i = " << d.half_shift << "\n";
      out << "sign = " << (d.sign > 0 ? "+1" : "-1") << "\n";
      return kOk;
    };
  });

  // surgery
  std::string linking_file;
  auto* surgery = app.add_subcommand("surgery", "linking numbers after surgery, signature and |H_1|");
  surgery->add_option("--linking", linking_file, "linking-matrix JSON file")->required();
  surgery->callback([&] {
    action = [&] {
      const FramedLinkMatrix m = read_linking_file(linking_file);
      const QMatrix block = m.surgery_block();
      const LabeledMatrix l = surgery_transform(m);
      out << "surgery labels: " << join(m.surgery_labels()) << "\n";
      out << "linking matrix after surgery:\n";
      print_labeled(out, l.labels, l.entries);
      const Signature sig = signature_pair(block);
      out << "signature of surgery block: (" << sig.positive << ", " << sig.negative << ")\n";
      if (is_integral(block)) out << "|H_1| = " << h1_order(block).get_str() << "\n";
      return kOk;
    };
  });

  // aarhus-struts
  std::string route = "both";
  auto* struts = app.add_subcommand("aarhus-struts", "strut part of the Aarhus invariant");
  struts->add_option("--linking", linking_file, "linking-matrix JSON file")->required();
  struts->add_option("--route", route, "wick, schur or both")->check(CLI::IsMember({"wick", "schur", "both"}));
  struts->callback([&] {
    action = [&] {
      const FramedLinkMatrix m = read_linking_file(linking_file);
      std::optional<StrutQuadratic> schur, wick;
      if (route != "wick") schur = strut_part_of_aarhus(m);
      if (route != "schur") wick = gaussian_pair(m);
      if (schur && wick && !(*schur == *wick)) {
        err << "error: Schur-complement and pairing routes disagree\n";
        return kRejected;
      }
      const StrutQuadratic& q = schur ? *schur : *wick;
      out << "route: " << route << "\n";
      out << "exp( 1/2 sum q_ij s(i,j) ) with q =\n";
      print_labeled(out, q.labels, q.q);
      return kOk;
    };
  });

  // mmr
  auto* mmr = app.add_subcommand("mmr", "h/(e^(h/2)-e^(-h/2)) * nabla at t^(1/2) = e^(h/2)");
  mmr->add_option("--seifert", seifert_file, "Seifert matrix JSON file");
  mmr->add_option("--fixture", fixture_name, "built-in fixture name");
  mmr->add_option("--components", components, "number of link components (overrides the file)");
  mmr->add_option("--order", order, "truncation order D")->check(CLI::NonNegativeNumber);
  mmr->callback([&] {
    action = [&] {
      SeifertInput in = load_seifert(seifert_file, fixture_name);
      out << to_string(mmr_series(in.seifert, components.value_or(in.components), order)) << "\n";
      return kOk;
    };
  });

  // wheels
  std::string from_series, from_seifert;
  auto* wheels = app.add_subcommand("wheels", "wheel exponents from an h-series or a knot's Seifert matrix");
  auto* opt_series = wheels->add_option("--from-series", from_series, "series expression or file containing one");
  auto* opt_seifert = wheels->add_option("--from-seifert", from_seifert, "Seifert matrix JSON file of a knot");
  opt_series->excludes(opt_seifert);
  wheels->add_option("--order", order, "truncation order D")->check(CLI::NonNegativeNumber);
  wheels->callback([&] {
    action = [&] {
      if (!from_series.empty()) {
        const HSeries f = parse_hseries(expression_or_file(from_series), order);
        out << to_string(wheels_from_series(f)) << "\n";
      } else if (!from_seifert.empty()) {
        const SeifertInput in = read_seifert_file(from_seifert);
        if (in.components != 1) throw ParseError("--from-seifert needs a knot (components = 1)");
        out << to_string(aarhus_wheels(in.seifert, order)) << "\n";
      } else {
        throw ParseError("one of --from-series or --from-seifert is required");
      }
      return kOk;
    };
  });

  // lmo
  std::string nabla_text, tor_text = "1", invert_file;
  bool as_json = false;
  std::optional<int> max_z_degree;
  auto* lmo = app.add_subcommand("lmo", "LMO wheel data of a rank-one manifold from nabla, or the converse");
  auto* opt_nabla = lmo->add_option("--nabla", nabla_text, "nabla(M) as a polynomial in z, e.g. \"1 + z^2\"");
  auto* opt_invert = lmo->add_option("--invert", invert_file, "recover nabla(M) from an LMO wheel-data JSON file");
  opt_nabla->excludes(opt_invert);
  lmo->add_option("--tor", tor_text, "order of the torsion of H_1");
  lmo->add_option("--order", order, "truncation order D")->check(CLI::NonNegativeNumber);
  lmo->add_option("--max-z-degree", max_z_degree, "z-degree bound for --invert (default: the order)");
  lmo->add_flag("--json", as_json, "print the wheel data as JSON (input format of --invert)");
  lmo->callback([&] {
    action = [&] {
      if (!invert_file.empty()) {
        const LmoWheelData data = read_lmo_file(invert_file);
        out << "nabla(z) = " << to_string(nabla_from_lmo_wheel_data(data, max_z_degree.value_or(data.order))) << "\n";
        return kOk;
      }
      if (nabla_text.empty()) throw ParseError("one of --nabla or --invert is required");
      const LmoWheelData data =
          lmo_wheel_data(parse_zpoly(nabla_text), positive_integer(tor_text, "--tor"), order);
      if (as_json) {
        out << to_json(data) << "\n";
      } else {
        out << "order: " << data.order << "\n";
        out << "torsion order: " << data.h1_order.get_str() << "\n";
        out << "knot wheels: " << to_string(data.knot_wheels) << "\n";
        out << "nu wheels: " << to_string(data.nu_wheels) << "\n";
      }
      return kOk;
    };
  });

  // roundtrip
  auto* roundtrip = app.add_subcommand("roundtrip", "check nabla -> LMO wheel data -> nabla");
  roundtrip->add_option("--nabla", nabla_text, "nabla(M) as a polynomial in z")->required();
  roundtrip->add_option("--tor", tor_text, "order of the torsion of H_1");
  roundtrip->add_option("--order", order, "truncation order D")->check(CLI::NonNegativeNumber);
  roundtrip->callback([&] {
    action = [&] {
      const ZPoly p = parse_zpoly(nabla_text);
      const LmoWheelData data = lmo_wheel_data(p, positive_integer(tor_text, "--tor"), order);
      const ZPoly back = nabla_from_lmo_wheel_data(data, std::max(p.z_degree(), 0));
      out << "input:     " << to_string(p) << "\n";
      out << "recovered: " << to_string(back) << "\n";
      if (!(back == p)) {
        out << "roundtrip: FAIL\n";
        return kRejected;
      }
      out << "roundtrip: OK\n";
      return kOk;
    };
  });

  // fixtures list
  auto* fixtures = app.add_subcommand("fixtures", "built-in knots and links");
  fixtures->require_subcommand(1);
  auto* list = fixtures->add_subcommand("list", "print the fixture table");
  list->callback([&] {
    action = [&] {
      for (const auto& f : builtin_fixtures()) {
        std::string rows;
        for (std::size_t i = 0; i < f.seifert.size(); ++i) rows += (i ? ", " : "") + matrix_row(f.seifert.entries(), i);
        out << f.name << "\tcomponents=" << f.components << "\tV=[" << rows << "]\tnabla=" << to_string(f.expected_nabla)
            << "\n";
      }
      return kOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    return action ? action() : kInputError;
  } catch (const MathError& e) {
    err << "rejected: " << e.what() << "\n";
    return kRejected;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace nablalmo::cli
