#include "gasket/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "gasket/constants.hpp"
#include "gasket/distortion.hpp"
#include "gasket/errors.hpp"

namespace gasket {

namespace {

std::string num(double x, int sig = 17) { return format_double(x, sig); }

Json null_or(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

double number_field(const Json& j, const char* key, int index) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw ParseError("step " + std::to_string(index) + ": field '" + key + "' must be a number");
  }
  return j.at(key).get<double>();
}

Subsystem subsystem_field(const Json& j, const char* key, int index) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw ParseError("step " + std::to_string(index) + ": field '" + key + "' must be a string");
  }
  return Subsystem::parse(j.at(key).get<std::string>());
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const Interval& x) { return Json{{"lo", x.lower()}, {"hi", x.upper()}}; }

Json constants_report() {
  Json j;
  Json h = Json::array();
  for (int n = 1; n <= 22; ++n) {
    const Interval v = per_map_distortion_h(n);
    h.push_back(Json{{"n", n}, {"h", to_json(v)}, {"width", v.width()}});
  }
  j["h"] = h;
  j["H"] = Json::array({to_json(monotonicity_witness_H(1)), to_json(monotonicity_witness_H(2))});
  j["H_majorant_from_3"] = monotonicity_majorant_H(3).upper();
  const DistortionConstants& c = composite_constants();
  j["K1"] = to_json(c.K1);
  j["koebe_sharp"] = Json::array({to_json(c.koebe_n1), to_json(c.koebe_n2), to_json(c.koebe_n3)});
  j["koebe_used"] =
      Json::array({to_json(c.koebe_n1_used), to_json(c.koebe_n2_used), to_json(c.koebe_n3_used)});
  j["koebe_published"] = Json::array({PublishedDistortion::koebe_n1, PublishedDistortion::koebe_n2,
                                      PublishedDistortion::koebe_n3});
  auto composite = [](const Interval& v, const Interval& sharp, double published, bool ok,
                      double canonical) {
    return Json{{"derived", to_json(v)},
                {"sharp", to_json(sharp)},
                {"published", published},
                {"within_published", ok},
                {"canonical", canonical}};
  };
  j["K_all"] = composite(c.K_all, c.K_all_sharp, PublishedDistortion::K_all,
                         c.K_all_within_published, c.canonical_all());
  j["K_n_gt_1"] = composite(c.K_n_gt_1, c.K_n_gt_1_sharp, PublishedDistortion::K_n_gt_1,
                            c.K_n_gt_1_within_published, c.canonical_n_gt_1());
  j["K_n_gt_2"] = composite(c.K_n_gt_2, c.K_n_gt_2_sharp, PublishedDistortion::K_n_gt_2,
                            c.K_n_gt_2_within_published, c.canonical_n_gt_2());
  return j;
}

std::string constants_text(const Json& j) {
  std::ostringstream os;
  auto iv = [](const Json& x) {
    const double lo = x.at("lo").get<double>(), hi = x.at("hi").get<double>();
    return num(0.5 * (lo + hi)) + "  (width " + num(hi - lo, 3) + ")";
  };
  os << "per-map distortion h(n), sup/inf = h(n)^2\n";
  for (const auto& e : j.at("h")) {
    os << "  h(" << std::setw(2) << e.at("n").get<int>() << ") = " << iv(e.at("h")) << '\n';
  }
  os << "monotonicity witness\n";
  os << "  H(1) = " << iv(j.at("H")[0]) << '\n';
  os << "  H(2) = " << iv(j.at("H")[1]) << '\n';
  os << "  H(n) <= " << num(j.at("H_majorant_from_3").get<double>(), 6) << " for n >= 3\n";
  os << "K1 = " << iv(j.at("K1")) << '\n';
  const char* names[] = {"n>=1", "n>1", "n>2"};
  os << "Koebe factors (sharp / used / published)\n";
  for (int i = 0; i < 3; ++i) {
    os << "  " << names[i] << ": " << num(j.at("koebe_sharp")[i].at("hi").get<double>(), 10)
       << " / " << num(j.at("koebe_used")[i].at("hi").get<double>(), 10) << " / "
       << num(j.at("koebe_published")[i].get<double>(), 10) << '\n';
  }
  os << "composite distortion constants (derived upper endpoint vs published)\n";
  for (const char* key : {"K_all", "K_n_gt_1", "K_n_gt_2"}) {
    const Json& c = j.at(key);
    os << "  " << std::left << std::setw(9) << key << std::right
       << num(c.at("derived").at("hi").get<double>(), 10) << "  published "
       << num(c.at("published").get<double>(), 10) << "  sharp "
       << num(c.at("sharp").at("hi").get<double>(), 10)
       << (c.at("within_published").get<bool>() ? "  ok" : "  EXCEEDS PUBLISHED") << '\n';
  }
  return os.str();
}

Json to_json(const DimBracket& b, bool meta) {
  Json j;
  j["subsystem"] = b.subsystem.to_string();
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["depth_lower"] = b.depth_lower;
  j["depth_upper"] = b.depth_upper;
  j["method_lower"] = b.method_lower;
  j["method_upper"] = b.method_upper;
  j["mode"] = b.certified ? "certified" : "exploratory";
  j["domain"] = to_string(b.domain);
  j["certified"] = b.certified;
  j["budget_exhausted"] = b.budget_exhausted;
  j["words_enumerated"] = b.words_enumerated;
  j["wall_time_s"] = meta ? Json(b.wall_time_s) : Json(nullptr);
  return j;
}

std::string dim_text(const DimBracket& b) {
  std::ostringstream os;
  os << b.subsystem.to_string() << ": dim in [" << num(b.lower, 10) << ", " << num(b.upper, 10)
     << "]\n  lower via " << b.method_lower << "\n  upper via " << b.method_upper << "\n  "
     << (b.certified ? "certified" : "NOT certified (exploratory)") << ", " << b.words_enumerated
     << " word evaluations" << (b.budget_exhausted ? ", budget exhausted" : "") << '\n';
  return os.str();
}

Json to_json(const TailVerdict& v) {
  return Json{{"passed", v.passed},
              {"t2", v.t2},
              {"K", v.K},
              {"K_certified", v.K_certified},
              {"N_closed_form", v.N_closed_form},
              {"M_start", v.M_start},
              {"direct_sum_limit", v.direct_sum_limit},
              {"norms", v.exact_norms ? "matrix" : "published"},
              {"directly_verified", v.directly_verified},
              {"first_failing_M", v.first_failing_M},
              {"worst_ratio", std::isfinite(v.worst_ratio) ? Json(v.worst_ratio) : Json(nullptr)},
              {"reuse_floor", v.reuse_floor},
              {"detail", v.detail}};
}

Json to_json(const SpectrumStep& s) {
  Json j{{"index", s.index},          {"F", s.F.to_string()}, {"D_F", s.D_F},
         {"F_tilde", s.F_tilde.to_string()}, {"t1", s.t1},   {"t2", s.t2},
         {"K", s.K},                  {"bound_provenance", to_string(s.bound_provenance)}};
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

SpectrumStep step_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("step entries must be objects");
  SpectrumStep s;
  if (!j.contains("index") || !j.at("index").is_number_integer()) {
    throw ParseError("step: field 'index' must be an integer");
  }
  s.index = j.at("index").get<int>();
  s.F = subsystem_field(j, "F", s.index);
  s.D_F = number_field(j, "D_F", s.index);
  s.F_tilde = subsystem_field(j, "F_tilde", s.index);
  s.t1 = number_field(j, "t1", s.index);
  s.t2 = number_field(j, "t2", s.index);
  s.K = number_field(j, "K", s.index);
  if (j.contains("bound_provenance")) {
    const std::string p = j.at("bound_provenance").get<std::string>();
    if (p == "computed") {
      s.bound_provenance = Provenance::Computed;
    } else if (p == "assumed") {
      s.bound_provenance = Provenance::Assumed;
    } else {
      throw ParseError("step " + std::to_string(s.index) + ": unknown bound_provenance '" + p + "'");
    }
  }
  if (j.contains("note")) s.note = j.at("note").get<std::string>();
  return s;
}

std::vector<SpectrumStep> steps_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("step file must hold a JSON array");
  std::vector<SpectrumStep> out;
  for (const auto& e : j) out.push_back(step_from_json(e));
  return out;
}

std::vector<SpectrumStep> load_steps(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read step file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("step file '" + path + "': " + e.what());
  }
  return steps_from_json(j);
}

Json steps_to_json(const std::vector<SpectrumStep>& steps) {
  Json j = Json::array();
  for (const auto& s : steps) j.push_back(to_json(s));
  return j;
}

Json to_json(const Certificate& c) {
  auto verdict = [](const Verdict& v) {
    return Json{{"passed", v.passed},
                {"provenance", to_string(v.provenance)},
                {"value", null_or(v.value)},
                {"detail", v.detail}};
  };
  return Json{{"step", to_json(c.step)},
              {"interval", Json::array({c.t1, c.t2})},
              {"passed", c.passed},
              {"wellformed", verdict(c.wellformed)},
              {"check_dim_upper", verdict(c.check_dim_upper)},
              {"check_dim_lower", verdict(c.check_dim_lower)},
              {"check_tail", to_json(c.check_tail)}};
}

Json to_json(const ChainReport& r) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  auto pairs = [](const std::vector<std::pair<double, double>>& v) {
    Json a = Json::array();
    for (const auto& p : v) a.push_back(Json::array({p.first, p.second}));
    return a;
  };
  return Json{{"provider", r.provider},
              {"passed", r.passed},
              {"total", r.certificates.size()},
              {"covered_union", pairs(r.covered)},
              {"gaps", pairs(r.gaps)},
              {"assumes_mu_segment", r.assumes_mu_segment},
              {"final_claim", Json::array({r.final_claim.first, r.final_claim.second})},
              {"reaches_half", r.reaches_half},
              {"full_spectrum", r.reaches_half && r.assumes_mu_segment},
              {"certificates", certs}};
}

std::string chain_text(const ChainReport& r) {
  std::ostringstream os;
  for (const auto& c : r.certificates) {
    os << "step " << std::setw(2) << c.step.index << "  [" << num(c.t1, 6) << ", " << num(c.t2, 6)
       << "]  " << (c.passed ? "passed" : "FAILED") << '\n';
    auto line = [&](const char* what, bool ok, const std::string& detail, const char* prov) {
      os << "    " << std::left << std::setw(10) << what << std::right << (ok ? "ok   " : "FAIL ")
         << prov << detail << '\n';
    };
    line("form", c.wellformed.passed, c.wellformed.detail, "");
    line("upper", c.check_dim_upper.passed, c.check_dim_upper.detail,
         c.check_dim_upper.provenance == Provenance::Assumed ? "[assumed] " : "[computed] ");
    line("lower", c.check_dim_lower.passed, c.check_dim_lower.detail,
         c.check_dim_lower.provenance == Provenance::Assumed ? "[assumed] " : "[computed] ");
    line("tail", c.check_tail.passed, c.check_tail.detail, "");
  }
  os << r.passed << "/" << r.certificates.size() << " passed (provider: " << r.provider << ")\n";
  os << "covered:";
  for (const auto& p : r.covered) os << " [" << num(p.first, 6) << ", " << num(p.second, 6) << "]";
  os << '\n';
  for (const auto& g : r.gaps) {
    os << "gap between " << num(g.first, 6) << " and " << num(g.second, 6) << '\n';
  }
  if (!r.covered.empty()) {
    os << "claim: [" << num(r.final_claim.first, 6) << ", " << num(r.final_claim.second, 6)
       << "] in DS";
    if (r.reaches_half) os << "; with [0, 1/2) the spectrum is full";
    os << '\n';
  }
  return os.str();
}

std::string certificates_csv(const std::vector<Certificate>& certs) {
  std::ostringstream os;
  os << "index,F,D_F,F_tilde,t1,t2,K,passed,wellformed,dim_upper,dim_upper_value,"
        "dim_upper_provenance,dim_lower,dim_lower_value,dim_lower_provenance,tail,"
        "K_certified,N_closed_form,M_start,direct_sum_limit,first_failing_M\n";
  for (const auto& c : certs) {
    const SpectrumStep& s = c.step;
    auto opt = [](const std::optional<double>& v) { return v ? num(*v) : std::string(); };
    os << s.index << ',' << csv_escape(s.F.to_string()) << ',' << num(s.D_F) << ','
       << csv_escape(s.F_tilde.to_string()) << ',' << num(s.t1) << ',' << num(s.t2) << ','
       << num(s.K) << ',' << c.passed << ',' << c.wellformed.passed << ','
       << c.check_dim_upper.passed << ',' << opt(c.check_dim_upper.value) << ','
       << to_string(c.check_dim_upper.provenance) << ',' << c.check_dim_lower.passed << ','
       << opt(c.check_dim_lower.value) << ',' << to_string(c.check_dim_lower.provenance) << ','
       << c.check_tail.passed << ',' << c.check_tail.K_certified << ','
       << c.check_tail.N_closed_form << ',' << c.check_tail.M_start << ','
       << c.check_tail.direct_sum_limit << ',' << c.check_tail.first_failing_M << '\n';
  }
  return os.str();
}

std::string steps_csv(const std::vector<SpectrumStep>& steps) {
  std::ostringstream os;
  os << "index,F,D_F,F_tilde,t1,t2,K,bound_provenance,note\n";
  for (const auto& s : steps) {
    os << s.index << ',' << csv_escape(s.F.to_string()) << ',' << num(s.D_F) << ','
       << csv_escape(s.F_tilde.to_string()) << ',' << num(s.t1) << ',' << num(s.t2) << ','
       << num(s.K) << ',' << to_string(s.bound_provenance) << ',' << csv_escape(s.note) << '\n';
  }
  return os.str();
}

RenderResult render_svg(const Subsystem& F, const RenderOptions& opts) {
  if (opts.iterations < 0 || opts.iterations > 4) {
    throw std::invalid_argument("render: iterations must be in 0..4");
  }
  if (opts.truncation < 1) throw std::invalid_argument("render: truncation must be positive");
  const std::vector<int> indices = F.members_up_to(opts.truncation);
  const std::vector<Letter> letters = alphabet(indices);
  std::size_t total = 0;
  for (int i = 1; i <= opts.iterations; ++i) {
    total += census_size(letters.size(), i);
    if (total > opts.max_disks) {
      throw BudgetExceeded("render would draw more than " + std::to_string(opts.max_disks) +
                           " disks");
    }
  }

  std::ostringstream os;
  os << std::setprecision(9);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.05 -1.05 2.1 2.1\" "
        "width=\"800\" height=\"800\">\n";
  os << "<g fill=\"none\" stroke-width=\"0.002\" transform=\"scale(1,-1)\">\n";
  os << "<circle cx=\"0\" cy=\"0\" r=\"1\" stroke=\"black\"/>\n";
  RenderResult res;
  const char* colours[] = {"#1f77b4", "#2ca02c", "#9467bd", "#8c564b"};
  std::vector<MoebiusMap> gens;
  for (const Letter& e : letters) gens.push_back(generator(e));
  std::vector<MoebiusMap> frontier{MoebiusMap::identity()};
  for (int i = 1; i <= opts.iterations; ++i) {
    std::vector<MoebiusMap> next;
    next.reserve(frontier.size() * gens.size());
    os << "<g stroke=\"" << colours[i - 1] << "\">\n";
    for (const MoebiusMap& m : frontier) {
      for (const MoebiusMap& g : gens) {
        next.push_back(compose(m, g));
        const Disk d = map_disk(next.back(), Disk::unit());
        os << "<circle cx=\"" << d.center.re.mid() << "\" cy=\"" << d.center.im.mid()
           << "\" r=\"" << d.radius.mid() << "\"/>\n";
        ++res.disks;
      }
    }
    os << "</g>\n";
    frontier = std::move(next);
  }
  if (opts.descartes) {
    const Interval& l = lambda();
    os << "<g stroke=\"#d62728\">\n";
    for (const Disk& d : descartes_chain(opts.descartes_count)) {
      os << "<circle cx=\"" << d.center.re.mid() << "\" cy=\"0\" r=\"" << d.radius.mid()
         << "\"/>\n";
    }
    os << "<circle cx=\"1\" cy=\"" << l.mid() << "\" r=\"" << l.mid() << "\"/>\n";
    os << "<circle cx=\"1\" cy=\"" << -l.mid() << "\" r=\"" << l.mid() << "\"/>\n";
    os << "</g>\n";
  }
  os << "</g>\n</svg>\n";
  res.svg = os.str();
  return res;
}

}  // namespace gasket
