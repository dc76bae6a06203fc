#include <wpc/cli.hpp>

#include <wpc/errors.hpp>
#include <wpc/search.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>

namespace wpc {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json json_int(const Int& v) {
  if (fits_int64(v)) return json(to_int64(v));
  return json(v.str());
}

json json_rat(const Rat& q) {
  if (is_integral(q)) return json_int(numerator(q));
  return json(rat_to_string(q));
}

json json_poly(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(json_int(c));
  return json{{"coefficients", coeffs}, {"text", p.to_string()}};
}

json json_matrix(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json json_ratfun(const RationalFunction& f) {
  json num = json::array();
  for (const auto& c : f.num().coeffs()) num.push_back(json_int(c));
  json den = json::array();
  for (const auto& c : f.den().coeffs()) den.push_back(json_int(c));
  return json{{"numerator", num}, {"denominator", den}, {"text", f.to_string()}};
}

json json_ci(const GradedCI& ci) {
  return json{{"generators", ci.generator_degrees()},
              {"relations", ci.relation_degrees()},
              {"text", ci.to_string()}};
}

json json_factorization(const CyclotomicFactorization& f) {
  json factors = json::array();
  for (const auto& [n, mult] : f.multiplicities) {
    factors.push_back(json::array({n, mult}));
  }
  return json{{"cyclotomic", factors},
              {"remainder", json_poly(f.remainder)},
              {"text", f.to_string()}};
}

std::vector<Int> parse_coords(const std::string& text) {
  std::vector<Int> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw ParseError("invalid coordinate: '" + std::string(item) + "'");
    }
    out.emplace_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (out.empty()) throw ParseError("empty coordinate vector");
  return out;
}

struct CliOptions {
  std::string format = "text";
  std::string signature;
  std::string ci;
  std::string x_coords;
  std::string y_coords;
  long series = 16;
  bool extended = false;
  bool spectral = false;
  SearchBounds bounds;
};

void emit(const json& doc, std::ostream& out) { out << doc.dump(2) << "\n"; }

std::string period_text(const std::optional<Int>& period) {
  if (!period) return "none";
  std::ostringstream os;
  os << *period;
  return os.str();
}

json period_json(const std::optional<Int>& period) {
  if (!period) return json(nullptr);
  return json_int(*period);
}

void run_chi(const CliOptions& opt, std::ostream& out) {
  const Signature sig = Signature::parse(opt.signature);
  const Rat chi = sig.orbifold_euler_char();
  if (opt.format == "json") {
    emit(json{{"schema_version", kSchemaVersion},
              {"command", "chi"},
              {"signature", sig.to_string()},
              {"chi", rat_to_string(chi)}},
         out);
  } else {
    out << rat_to_string(chi) << "\n";
  }
}

void run_cartan(const CliOptions& opt, std::ostream& out) {
  const Signature sig = Signature::parse(opt.signature);
  LatticePtr lattice = opt.extended ? extended_lattice(sig) : build_lattice(sig);
  if (opt.format == "json") {
    emit(json{{"schema_version", kSchemaVersion},
              {"command", "cartan"},
              {"signature", sig.to_string()},
              {"extended", opt.extended},
              {"basis", lattice->basis_labels()},
              {"matrix", json_matrix(lattice->cartan())}},
         out);
  } else {
    out << "basis:";
    for (const auto& label : lattice->basis_labels()) out << ' ' << label;
    out << "\n" << lattice->cartan().to_string();
  }
}

void run_tau(const CliOptions& opt, std::ostream& out) {
  const Signature sig = Signature::parse(opt.signature);
  LatticePtr lattice = build_lattice(sig);
  const IntMatrix t = tau_matrix(*lattice);
  if (opt.format == "json") {
    emit(json{{"schema_version", kSchemaVersion},
              {"command", "tau"},
              {"signature", sig.to_string()},
              {"basis", lattice->basis_labels()},
              {"matrix", json_matrix(t)}},
         out);
  } else {
    out << "basis:";
    for (const auto& label : lattice->basis_labels()) out << ' ' << label;
    out << "\n" << t.to_string();
  }
}

void run_coxeter(const CliOptions& opt, std::ostream& out) {
  const Signature sig = Signature::parse(opt.signature);
  LatticePtr lattice = opt.extended ? extended_lattice(sig) : build_lattice(sig);
  const CoxeterReport report = analyze_coxeter(*lattice, opt.spectral);
  if (opt.format == "json") {
    json doc{{"schema_version", kSchemaVersion},
             {"command", "coxeter"},
             {"signature", sig.to_string()},
             {"extended", opt.extended},
             {"matrix", json_matrix(report.matrix)},
             {"polynomial", json_poly(report.polynomial)},
             {"factorization", json_factorization(report.factorization)},
             {"period", period_json(report.period)}};
    if (report.spectral_radius) doc["spectral_radius"] = *report.spectral_radius;
    emit(doc, out);
  } else {
    out << "matrix:\n" << report.matrix.to_string();
    out << "polynomial: " << report.polynomial.to_string() << "\n";
    out << "factorization: " << report.factorization.to_string() << "\n";
    out << "period: " << period_text(report.period) << "\n";
    if (report.spectral_radius) {
      out << "spectral-radius: " << std::setprecision(12) << *report.spectral_radius
          << "\n";
    }
  }
}

void print_series(const char* command, const std::string& input_key,
                  const std::string& input_value, const RationalFunction& f,
                  long series_len, const CliOptions& opt, std::ostream& out) {
  const std::vector<Rat> coeffs = f.series(static_cast<int>(series_len));
  if (opt.format == "json") {
    json doc{{"schema_version", kSchemaVersion},
             {"command", command},
             {input_key, input_value},
             {"series", json_ratfun(f)}};
    json values = json::array();
    for (const auto& c : coeffs) values.push_back(json_rat(c));
    doc["coefficients"] = values;
    emit(doc, out);
  } else {
    out << "series: " << f.to_string() << "\n";
    out << "coefficients:";
    for (const auto& c : coeffs) out << ' ' << rat_to_string(c);
    out << "\n";
  }
}

void run_poincare(const CliOptions& opt, std::ostream& out) {
  const Signature sig = Signature::parse(opt.signature);
  print_series("poincare", "signature", sig.to_string(), poincare_series(sig),
               opt.series, opt, out);
}

void run_hilbert(const CliOptions& opt, std::ostream& out) {
  const GradedCI ci = GradedCI::parse(opt.ci);
  print_series("hilbert", "ci", ci.to_string(), hilbert_series(ci), opt.series, opt,
               out);
}

void run_extended(const CliOptions& opt, std::ostream& out) {
  const Signature sig = Signature::parse(opt.signature);
  LatticePtr lattice = extended_lattice(sig);
  const IntMatrix phi = coxeter_matrix(*lattice);
  const IntPolynomial poly = phi.charpoly();
  if (opt.format == "json") {
    emit(json{{"schema_version", kSchemaVersion},
              {"command", "extended"},
              {"signature", sig.to_string()},
              {"basis", lattice->basis_labels()},
              {"cartan", json_matrix(lattice->cartan())},
              {"coxeter", json_matrix(phi)},
              {"polynomial", json_poly(poly)}},
         out);
  } else {
    out << "basis:";
    for (const auto& label : lattice->basis_labels()) out << ' ' << label;
    out << "\n";
    out << "cartan:\n" << lattice->cartan().to_string();
    out << "coxeter:\n" << phi.to_string();
    out << "polynomial: " << poly.to_string() << "\n";
  }
}

void run_gorenstein(const CliOptions& opt, std::ostream& out) {
  const GradedCI ci = GradedCI::parse(opt.ci);
  const Int a = gorenstein_parameter(ci);
  if (opt.format == "json") {
    emit(json{{"schema_version", kSchemaVersion},
              {"command", "gorenstein"},
              {"ci", ci.to_string()},
              {"parameter", json_int(a)}},
         out);
  } else {
    out << a << "\n";
  }
}

void run_match(const CliOptions& opt, std::ostream& out) {
  const GradedCI ci = GradedCI::parse(opt.ci);
  const Signature sig = Signature::parse(opt.signature);
  const bool matched = is_fuchsian_match(ci, sig);
  if (opt.format == "json") {
    emit(json{{"schema_version", kSchemaVersion},
              {"command", "match"},
              {"ci", ci.to_string()},
              {"signature", sig.to_string()},
              {"match", matched}},
         out);
  } else {
    out << (matched ? "true" : "false") << "\n";
  }
}

void run_hypersurfaces(const CliOptions& opt, std::ostream& out) {
  const Signature sig = Signature::parse(opt.signature);
  const std::vector<GradedCI> found = find_hypersurfaces(sig, opt.bounds);
  if (opt.format == "json") {
    json list = json::array();
    for (const auto& ci : found) list.push_back(json_ci(ci));
    emit(json{{"schema_version", kSchemaVersion},
              {"command", "hypersurfaces"},
              {"signature", sig.to_string()},
              {"max_degree", opt.bounds.max_generator_degree},
              {"presentations", list}},
         out);
  } else {
    for (const auto& ci : found) out << ci.to_string() << "\n";
  }
}

std::string degree_list_text(const std::vector<long>& degrees) {
  std::ostringstream os;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i > 0) os << ',';
    os << degrees[i];
  }
  return os.str();
}

void run_classify(const CliOptions& opt, std::ostream& out) {
  const ClassificationReport report = classify_genus_zero(opt.bounds);
  if (opt.format == "json") {
    json entries = json::array();
    for (const auto& entry : report.entries) {
      json list = json::array();
      for (const auto& ci : entry.presentations) list.push_back(json_ci(ci));
      entries.push_back(
          json{{"signature", entry.signature.to_string()},
               {"chi", rat_to_string(entry.signature.orbifold_euler_char())},
               {"presentations", list}});
    }
    emit(json{{"schema_version", kSchemaVersion},
              {"command", "classify-genus0"},
              {"bounds",
               json{{"max_weight_count", opt.bounds.max_weight_count},
                    {"max_weight", opt.bounds.max_weight},
                    {"max_generator_degree", opt.bounds.max_generator_degree}}},
              {"entries", entries},
              {"total", report.total()},
              {"three_weight", report.three_weight_count()}},
         out);
  } else {
    out << std::left << std::setw(18) << "signature" << std::setw(15) << "degrees"
        << std::setw(5) << "h"
        << "chi\n";
    for (const auto& entry : report.entries) {
      for (const auto& ci : entry.presentations) {
        out << std::left << std::setw(18) << entry.signature.to_string()
            << std::setw(15) << degree_list_text(ci.generator_degrees())
            << std::setw(5) << degree_list_text(ci.relation_degrees())
            << rat_to_string(entry.signature.orbifold_euler_char()) << "\n";
      }
    }
    out << "total: " << report.total() << "\n";
    out << "three-weight: " << report.three_weight_count() << "\n";
  }
}

void run_pi1(const CliOptions& opt, std::ostream& out) {
  const Signature sig = Signature::parse(opt.signature);
  const GroupPresentation p = fundamental_group_presentation(sig);
  if (opt.format == "json") {
    emit(json{{"schema_version", kSchemaVersion},
              {"command", "pi1"},
              {"signature", sig.to_string()},
              {"generators", p.generators},
              {"relations", p.relations}},
         out);
  } else {
    out << "generators:";
    for (const auto& g : p.generators) out << ' ' << g;
    out << "\n";
    out << "relations:";
    for (const auto& r : p.relations) out << ' ' << r;
    out << "\n";
  }
}

void run_rr(const CliOptions& opt, std::ostream& out) {
  const Signature sig = Signature::parse(opt.signature);
  LatticePtr lattice = build_lattice(sig);
  const KClass x = make_class(lattice, parse_coords(opt.x_coords));
  const KClass y = make_class(lattice, parse_coords(opt.y_coords));
  const Rat lhs = averaged_euler_form(x, y);
  const Rat rhs = riemann_roch_rhs(x, y);
  if (opt.format == "json") {
    json xj = json::array();
    for (const auto& c : x.coords) xj.push_back(json_int(c));
    json yj = json::array();
    for (const auto& c : y.coords) yj.push_back(json_int(c));
    emit(json{{"schema_version", kSchemaVersion},
              {"command", "rr"},
              {"signature", sig.to_string()},
              {"x", xj},
              {"y", yj},
              {"x_rank", json_int(rank_of(x))},
              {"x_degree", json_int(degree_of(x))},
              {"y_rank", json_int(rank_of(y))},
              {"y_degree", json_int(degree_of(y))},
              {"averaged_euler_form", rat_to_string(lhs)},
              {"riemann_roch_rhs", rat_to_string(rhs)},
              {"equal", lhs == rhs}},
         out);
  } else {
    out << "x: rank " << rank_of(x) << " degree " << degree_of(x) << "\n";
    out << "y: rank " << rank_of(y) << " degree " << degree_of(y) << "\n";
    out << "averaged-euler-form: " << rat_to_string(lhs) << "\n";
    out << "riemann-roch-rhs: " << rat_to_string(rhs) << "\n";
    out << "equal: " << (lhs == rhs ? "true" : "false") << "\n";
  }
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of weighted projective curves and the graded "
               "singularities attached to them"};
  app.require_subcommand(1);
  CliOptions opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_signature = [&](CLI::App* sub) {
    sub->add_option("signature", opt.signature, "Signature \"g;a1,a2,...\"")
        ->required();
  };
  auto add_ci = [&](CLI::App* sub) {
    sub->add_option("ci", opt.ci, "Complete intersection \"d1,d2,...|h1,h2,...\"")
        ->required();
  };

  auto* chi = app.add_subcommand("chi", "Orbifold Euler characteristic");
  add_signature(chi);
  add_format(chi);
  chi->callback([&] { run_chi(opt, out); });

  auto* cartan = app.add_subcommand("cartan", "Cartan matrix of the Euler form");
  add_signature(cartan);
  add_format(cartan);
  cartan->add_flag("--extended", opt.extended, "One-point extension lattice");
  cartan->callback([&] { run_cartan(opt, out); });

  auto* tau = app.add_subcommand("tau", "Matrix of the tau-action");
  add_signature(tau);
  add_format(tau);
  tau->callback([&] { run_tau(opt, out); });

  auto* coxeter = app.add_subcommand(
      "coxeter", "Coxeter matrix, polynomial, factorization and period");
  add_signature(coxeter);
  add_format(coxeter);
  coxeter->add_flag("--extended", opt.extended, "One-point extension lattice");
  coxeter->add_flag("--spectral", opt.spectral, "Include a spectral radius estimate");
  coxeter->callback([&] { run_coxeter(opt, out); });

  auto* poincare = app.add_subcommand("poincare", "Poincare series of the singularity");
  add_signature(poincare);
  add_format(poincare);
  poincare->add_option("--series", opt.series, "Number of coefficients to print")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  poincare->callback([&] { run_poincare(opt, out); });

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of a graded CI");
  add_ci(hilbert);
  add_format(hilbert);
  hilbert->add_option("--series", opt.series, "Number of coefficients to print")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  hilbert->callback([&] { run_hilbert(opt, out); });

  auto* extended =
      app.add_subcommand("extended", "One-point extension: Cartan, Coxeter, charpoly");
  add_signature(extended);
  add_format(extended);
  extended->callback([&] { run_extended(opt, out); });

  auto* gorenstein = app.add_subcommand("gorenstein", "Gorenstein parameter");
  add_ci(gorenstein);
  add_format(gorenstein);
  gorenstein->callback([&] { run_gorenstein(opt, out); });

  auto* match =
      app.add_subcommand("match", "Does the CI present the fuchsian singularity?");
  add_ci(match);
  add_signature(match);
  add_format(match);
  match->callback([&] { run_match(opt, out); });

  auto* hyper = app.add_subcommand("hypersurfaces",
                                   "Search hypersurface presentations of a signature");
  add_signature(hyper);
  add_format(hyper);
  hyper->add_option("--max-degree", opt.bounds.max_generator_degree,
                    "Generator degree bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  hyper->callback([&] { run_hypersurfaces(opt, out); });

  auto* classify = app.add_subcommand(
      "classify-genus0", "Classify genus-zero fuchsian hypersurface singularities");
  add_format(classify);
  classify
      ->add_option("--max-degree", opt.bounds.max_generator_degree,
                   "Generator degree bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  classify
      ->add_option("--max-weight", opt.bounds.max_weight, "Largest weight to scan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  classify
      ->add_option("--max-count", opt.bounds.max_weight_count,
                   "Largest number of weights to scan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  classify->callback([&] { run_classify(opt, out); });

  auto* pi1 = app.add_subcommand("pi1", "Orbifold fundamental group presentation");
  add_signature(pi1);
  add_format(pi1);
  pi1->callback([&] { run_pi1(opt, out); });

  auto* rr = app.add_subcommand("rr", "Riemann-Roch evaluation on coordinate vectors");
  add_signature(rr);
  rr->add_option("x", opt.x_coords, "First class, e.g. \"1,0\"")->required();
  rr->add_option("y", opt.y_coords, "Second class")->required();
  add_format(rr);
  rr->callback([&] { run_rr(opt, out); });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace wpc
