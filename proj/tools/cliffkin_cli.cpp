#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cliffkin/cliffkin.hpp"

using namespace cliffkin;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string trim(std::string s) {
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

void check_format(const std::string& format) {
  if (format != "text" && format != "json") throw UsageError("--format must be text or json");
}

std::string point_text(const std::vector<Rational>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].get_str();
  return s + ")";
}

int cmd_derive(const std::string& sig_text, const std::string& method, const std::string& format) {
  check_format(format);
  AlgebraSignature sig = parse_signature(sig_text);
  if (method != "spin" && method != "kinematic") throw UsageError("--method must be spin or kinematic");
  const VarietySpec v = method == "spin" ? derive_spin_variety(sig) : derive_kinematic_variety(sig);
  if (format == "json") {
    std::cout << to_json(v).dump(2) << "\n";
    return kOk;
  }
  std::cout << "signature " << to_string(v.signature) << ", ambient P^" << v.ambient_dim << ", source "
            << to_string(v.source) << "\n";
  std::cout << "exceptional: " << to_string(v.exceptional) << " != 0\n";
  std::cout << "constraints: " << v.constraints.size() << "\n";
  for (std::size_t i = 0; i < v.constraints.size(); ++i)
    std::cout << "  " << i + 1 << ". " << to_string(v.constraints[i].form) << " = 0    [" << v.constraints[i].origin
              << "]\n";
  return kOk;
}

/// "identity", or comma-separated name=value with names from the coordinate convention or blade names.
RationalMultivector parse_element(const AlgebraSignature& sig, const std::string& text) {
  if (text == "identity") return RationalMultivector::one(sig);
  std::map<std::string, Rational, std::less<>> coords;
  RationalMultivector blades(sig);
  for (const auto& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("element assignment '" + item + "' lacks '='");
    std::string name = trim(item.substr(0, eq));
    Rational value = parse_rational(trim(item.substr(eq + 1)));
    if (!name.empty() && name[0] == 'e')
      blades += RationalMultivector::blade(sig, name, value);
    else
      coords[name] += value;
  }
  return even_element_from_coordinates(sig, coords) + blades;
}

int cmd_matrix(const std::string& sig_text, bool generic, const std::string& element, const std::string& target,
               const std::string& basis_name, const std::string& format) {
  check_format(format);
  AlgebraSignature sig = parse_signature(sig_text);
  if (generic == !element.empty()) throw UsageError("give exactly one of --generic and --element");
  if (target != "point" && target != "image") throw UsageError("--target must be point or image");
  BasisOrdering basis = !basis_name.empty() ? named_ordering(sig, basis_name)
                        : target == "point" ? default_point_ordering(sig)
                                            : default_image_ordering(sig);
  auto emit = [&](const auto& m, const std::string& title) {
    if (format == "json") return;
    std::cout << title << "\n" << to_string(m);
  };
  if (generic) {
    auto g = generic_even_element(sig).element;
    if (target == "point") {
      auto pm = point_collineation(g, basis);
      if (format == "json") {
        Json j = to_json(pm);
        j["basis"] = to_string(basis);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "basis " << to_string(basis) << "\nDelta = " << to_string(pm.delta) << "\n";
        emit(pm.raw, "raw (divide by Delta):");
      }
    } else {
      auto m = matrix_rep(g, Side::left, basis);
      if (format == "json") {
        Json j = to_json(m);
        j["basis"] = to_string(basis);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "basis " << to_string(basis) << "\n";
        emit(m, "left multiplication:");
      }
    }
    return kOk;
  }
  RationalMultivector g = parse_element(sig, element);
  if (target == "point") {
    auto pm = point_collineation(g, basis);
    if (format == "json") {
      Json j = to_json(pm);
      j["basis"] = to_string(basis);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "basis " << to_string(basis) << "\nDelta = " << pm.delta.get_str() << "\n";
      emit(pm.normalized(), "normalized:");
    }
  } else {
    auto m = matrix_rep(g, Side::left, basis);
    if (format == "json") {
      Json j = to_json(m);
      j["basis"] = to_string(basis);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "basis " << to_string(basis) << "\n";
      emit(m, "left multiplication:");
    }
  }
  return kOk;
}

int cmd_map_bg(const std::string& half_angle, const std::string& a, const std::string& b, const std::string& format) {
  check_format(format);
  auto parts = split(half_angle, ',');
  if (parts.size() != 2) throw UsageError("--half-angle expects c,s");
  auto x = blaschke_grunwald(parse_rational(trim(parts[0])), parse_rational(trim(parts[1])), parse_rational(a),
                             parse_rational(b));
  std::vector<Rational> v(x.begin(), x.end());
  if (format == "json") {
    Json p = Json::array();
    for (const auto& c : v) p.push_back(c.get_str());
    std::cout << Json{{"point", p}}.dump(2) << "\n";
  } else {
    std::cout << point_text(v) << "\n";
  }
  return kOk;
}

/// Planes separated by ';', coordinates by ','.
int cmd_map_study(const std::string& planes_text, const std::string& format) {
  check_format(format);
  AlgebraSignature sig(3, 0, 1);
  std::vector<std::vector<Rational>> planes;
  for (const auto& plane : split(planes_text, ';')) {
    std::vector<Rational> coords;
    for (const auto& c : split(plane, ',')) coords.push_back(parse_rational(trim(c)));
    if (static_cast<int>(coords.size()) != sig.n()) throw UsageError("each plane needs 4 coordinates");
    planes.push_back(std::move(coords));
  }
  if (planes.empty() || planes.size() % 2 != 0) throw UsageError("give an even, nonzero number of planes");
  auto witness = spin_from_reflections(sig, planes);
  auto point = study_map(witness.element);
  auto study = derive_spin_variety(sig).constraints.front().form;
  std::map<std::string, Rational, std::less<>> at;
  const char* names[8] = {"a0", "a1", "a2", "a3", "c0", "c1", "c2", "c3"};
  for (int i = 0; i < 8; ++i) at[names[i]] = point[i];
  Rational value = study.polynomial().eval(at);
  std::vector<Rational> v(point.begin(), point.end());
  if (format == "json") {
    Json p = Json::array();
    for (const auto& c : v) p.push_back(c.get_str());
    std::cout << Json{{"element", to_json(witness.element)}, {"point", p}, {"study_quadric", value.get_str()}}.dump(2)
              << "\n";
  } else {
    std::cout << "element: " << to_string(witness.element) << "\n";
    std::cout << "point (a0,a1,a2,a3,c0,c1,c2,c3): " << point_text(v) << "\n";
    std::cout << "study quadric value: " << value.get_str() << "\n";
  }
  return value == 0 ? kOk : kMismatch;
}

int cmd_catalog(const std::string& action, bool all, const std::string& entry, const std::string& format) {
  check_format(format);
  if (action == "list") {
    if (format == "json") {
      Json j = Json::array();
      for (const auto& e : catalog_entries()) j.push_back(to_json(e));
      std::cout << j.dump(2) << "\n";
      return kOk;
    }
    for (const auto& e : catalog_entries()) {
      std::string sigs;
      for (const auto& s : e.signatures) sigs += (sigs.empty() ? "" : " ") + to_string(s);
      std::cout << e.key << "  [" << e.name << ", dim " << e.dim << "]  " << to_string(e.absolute_figure) << "  "
                << (e.representable ? sigs : "not representable") << "\n";
    }
    return kOk;
  }
  if (action != "verify") throw UsageError("catalog action must be list or verify");
  if (all == !entry.empty()) throw UsageError("give exactly one of --all and --entry");
  std::vector<const CKEntry*> chosen;
  if (all)
    for (const auto& e : catalog_entries()) chosen.push_back(&e);
  else
    chosen.push_back(&find_entry(entry));
  bool ok = true;
  Json reports = Json::array();
  for (const CKEntry* e : chosen) {
    if (!e->representable) {
      if (format == "json")
        reports.push_back({{"key", e->key}, {"representable", false}});
      else
        std::cout << e->key << ": NOT REPRESENTABLE\n";
      continue;
    }
    VerifyReport r = verify_entry(*e);
    ok = ok && r.passed();
    if (format == "json")
      reports.push_back(to_json(r));
    else
      std::cout << to_string(r);
  }
  if (format == "json") std::cout << reports.dump(2) << "\n";
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clifford-algebra kinematics"};
  app.require_subcommand(1);
  std::string format = "text";

  auto* derive = app.add_subcommand("derive", "derive the kinematic image variety of a signature");
  std::string sig, method = "spin";
  derive->add_option("--sig", sig, "signature p,q,r")->required();
  derive->add_option("--method", method, "spin or kinematic");
  derive->add_option("--format", format, "text or json");

  auto* matrix = app.add_subcommand("matrix", "displacement or image-space matrix of an even element");
  bool generic = false;
  std::string element, target, basis;
  matrix->add_option("--sig", sig, "signature p,q,r")->required();
  matrix->add_flag("--generic", generic, "use the generic symbolic element");
  matrix->add_option("--element", element, "identity, or name=value,... (a0=1,c1=1/2 or e12=3/5)");
  matrix->add_option("--target", target, "point or image")->required();
  matrix->add_option("--basis", basis, "named ordering: paper-se3, paper-se2, paper-se3-image, paper-se2-image, "
                                       "full, even, grade-k");
  matrix->add_option("--format", format, "text or json");

  auto* map = app.add_subcommand("map", "kinematic mappings");
  map->require_subcommand(1);
  auto* bg = map->add_subcommand("bg", "planar image point of a displacement");
  std::string half_angle, a = "0", b = "0";
  bg->add_option("--half-angle", half_angle, "cos,sin of half the rotation angle")->required();
  bg->add_option("--a", a, "translation x");
  bg->add_option("--b", b, "translation y");
  bg->add_option("--format", format, "text or json");
  auto* study = map->add_subcommand("study", "Study point of a product of plane reflections");
  std::string planes;
  study->add_option("--from-reflections", planes, "planes x1,x2,x3,x4 separated by ';'")->required();
  study->add_option("--format", format, "text or json");

  auto* catalog = app.add_subcommand("catalog", "Cayley-Klein catalog");
  std::string action;
  bool all = false;
  std::string entry;
  catalog->add_option("action", action, "list or verify")->required();
  catalog->add_flag("--all", all, "verify every entry");
  catalog->add_option("--entry", entry, "entry key or 'name, dim d'");
  catalog->add_option("--format", format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*derive) return cmd_derive(sig, method, format);
    if (*matrix) return cmd_matrix(sig, generic, element, target, basis, format);
    if (*bg) return cmd_map_bg(half_angle, a, b, format);
    if (*study) return cmd_map_study(planes, format);
    if (*catalog) return cmd_catalog(action, all, entry, format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
