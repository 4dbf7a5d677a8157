#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "cliffkin/errors.hpp"
#include "cliffkin/groups.hpp"
#include "cliffkin/kinmap.hpp"
#include "cliffkin/quadric.hpp"

namespace cliffkin {

/// One link of an absolute figure: a quadric Q^d_{rank,index} or a subspace A^d.
struct FigureElement {
  enum class Kind { quadric, subspace } kind = Kind::quadric;
  int dim = 0;
  int rank = 0;
  int index = 0;

  static FigureElement quadric(int dim, int rank, int index) { return {Kind::quadric, dim, rank, index}; }
  static FigureElement subspace(int dim) { return {Kind::subspace, dim, 0, 0}; }
  friend bool operator==(const FigureElement&, const FigureElement&) = default;
};

using AbsoluteFigure = std::vector<FigureElement>;

/// "Q^1_{1,0} > A^1 > Q^0_{2,0}"; an empty figure prints as "unrecorded".
inline std::string to_string(const AbsoluteFigure& f) {
  if (f.empty()) return "unrecorded";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += " > ";
    const auto& e = f[i];
    if (e.kind == FigureElement::Kind::quadric)
      s += "Q^" + std::to_string(e.dim) + "_{" + std::to_string(e.rank) + "," + std::to_string(e.index) + "}";
    else
      s += "A^" + std::to_string(e.dim);
  }
  return s;
}

struct ImageSpace {
  std::string name;
  AbsoluteFigure figure;
};

struct CKEntry {
  std::string key;
  std::string name;
  int dim = 0;
  AbsoluteFigure absolute_figure;
  std::vector<AlgebraSignature> signatures;
  std::optional<std::string> expected_exceptional;   // under the naming of the first signature
  std::vector<std::string> expected_constraints;
  bool representable = true;
  std::optional<ImageSpace> image_space;               // planar entries
  std::optional<int> point_grade;
  bool exceptional_without_real_points = false;
};

namespace detail {

using F = FigureElement;

inline std::string make_key(const std::string& name, int dim) {
  std::string key;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    else if ((c == ' ' || c == '-') && !key.empty() && key.back() != '-')
      key += '-';
  }
  return key + "-" + std::to_string(dim) + "d";
}

inline CKEntry planar(std::string name, AbsoluteFigure fig, std::vector<AlgebraSignature> sigs,
                      std::optional<std::string> exceptional, ImageSpace image, int point_grade, bool definite = false) {
  CKEntry e;
  e.key = make_key(name, 2);
  e.name = std::move(name);
  e.dim = 2;
  e.absolute_figure = std::move(fig);
  e.signatures = std::move(sigs);
  e.expected_exceptional = std::move(exceptional);
  e.image_space = std::move(image);
  e.point_grade = point_grade;
  e.exceptional_without_real_points = definite;
  return e;
}

inline const char* kStudyQuadric = "a0*c0 - a1*c1 + a2*c2 - a3*c3";

inline CKEntry spatial(std::string name, AbsoluteFigure fig, std::vector<AlgebraSignature> sigs, std::string exceptional,
                       std::optional<int> point_grade = std::nullopt, bool definite = false) {
  CKEntry e;
  e.key = make_key(name, 3);
  e.name = std::move(name);
  e.dim = 3;
  e.absolute_figure = std::move(fig);
  e.signatures = std::move(sigs);
  e.expected_exceptional = std::move(exceptional);
  e.expected_constraints = {kStudyQuadric};
  e.point_grade = point_grade;
  e.exceptional_without_real_points = definite;
  return e;
}

}  // namespace detail

/// Planar rows with their image spaces, spatial rows, and the non-representable galilei space.
inline const std::vector<CKEntry>& catalog_entries() {
  using detail::F;
  using S = AlgebraSignature;
  static const std::vector<CKEntry> entries = [] {
    std::vector<CKEntry> v;
    const ImageSpace quasi_elliptic{"quasi-elliptic", {F::quadric(2, 2, 0), F::subspace(1), F::quadric(0, 2, 0)}};
    const ImageSpace quasi_hyperbolic{"quasi-hyperbolic idx. 0",
                                      {F::quadric(2, 2, 1), F::subspace(1), F::quadric(0, 2, 1)}};
    v.push_back(detail::planar("elliptic", {F::quadric(1, 3, 0)}, {S(3, 0, 0), S(0, 3, 0)},
                               "a0^2 + a1^2 + c0^2 + c1^2", {"elliptic", {F::quadric(2, 4, 0)}}, 2, true));
    v.push_back(detail::planar("hyperbolic", {F::quadric(1, 3, 1)}, {S(2, 1, 0), S(1, 2, 0)}, std::nullopt,
                               {"hyperbolic idx. 1", {F::quadric(2, 4, 2)}}, 2));
    v.push_back(detail::planar("Euclidean", {F::quadric(1, 1, 0), F::subspace(1), F::quadric(0, 2, 0)},
                               {S(2, 0, 1), S(0, 2, 1)}, "a0^2 + a1^2", quasi_elliptic, 2));
    v.push_back(detail::planar("pseudo-Euclidean", {F::quadric(1, 1, 0), F::subspace(1), F::quadric(0, 2, 1)},
                               {S(1, 1, 1)}, std::nullopt, quasi_hyperbolic, 2));
    v.push_back(detail::planar("quasi-elliptic", {F::quadric(1, 2, 0), F::subspace(0), F::quadric(-1, 1, 0)},
                               {S(2, 0, 1), S(0, 2, 1)}, "a0^2 + a1^2", quasi_elliptic, 1));
    v.push_back(detail::planar("quasi-hyperbolic", {F::quadric(1, 2, 1), F::subspace(0), F::quadric(-1, 1, 0)},
                               {S(1, 1, 1)}, std::nullopt, quasi_hyperbolic, 1));
    v.push_back(detail::planar(
        "totally isotr. space",
        {F::quadric(1, 1, 0), F::subspace(1), F::quadric(0, 1, 0), F::subspace(0), F::quadric(-1, 1, 0)},
        {S(1, 0, 2), S(0, 1, 2)}, std::nullopt,
        {"totally isotr. space",
         {F::quadric(2, 1, 0), F::subspace(2), F::quadric(1, 2, 0), F::subspace(0), F::quadric(-1, 1, 0)}},
        2));

    v.push_back(detail::spatial("elliptic", {F::quadric(2, 4, 0)}, {S(4, 0, 0), S(0, 4, 0)},
                                "a0^2 + a1^2 + a2^2 + a3^2 + c0^2 + c1^2 + c2^2 + c3^2", std::nullopt, true));
    v.push_back(detail::spatial("hyperbolic idx. 0", {}, {S(3, 1, 0), S(1, 3, 0)},
                                "a0^2 + a1^2 + a2^2 + a3^2 - c0^2 - c1^2 - c2^2 - c3^2"));
    v.push_back(detail::spatial("hyperbolic idx. 1", {F::quadric(2, 4, 2)}, {S(2, 2, 0)},
                                "a0^2 - a1^2 - a2^2 + a3^2 + c0^2 - c1^2 - c2^2 + c3^2"));
    v.push_back(detail::spatial("Euclidean", {F::quadric(2, 1, 0), F::subspace(2), F::quadric(1, 2, 0)},
                                {S(3, 0, 1), S(0, 3, 1)}, "a0^2 + a1^2 + a2^2 + a3^2", 3));
    v.push_back(detail::spatial("pseudo-Euclidean", {}, {S(2, 1, 1), S(1, 2, 1)}, "a0^2 - a1^2 - a2^2 + a3^2"));
    v.push_back(detail::spatial("quasi-elliptic", {F::quadric(2, 2, 0), F::subspace(1), F::quadric(0, 2, 0)},
                                {S(2, 0, 2), S(0, 2, 2)}, "a0^2 + a3^2"));
    v.push_back(detail::spatial("quasi-hyperbolic idx. 0", {F::quadric(2, 2, 1), F::subspace(1), F::quadric(0, 2, 1)},
                                {S(1, 1, 2)}, "a0^2 - a3^2"));
    v.push_back(detail::spatial("double isotr. flagspace", {}, {S(1, 0, 3), S(0, 1, 3)}, "a0^2"));

    CKEntry galilei;
    galilei.key = detail::make_key("galilei", 3);
    galilei.name = "galilei";
    galilei.dim = 3;
    galilei.absolute_figure = {F::quadric(2, 1, 0), F::subspace(2), F::quadric(1, 1, 0), F::subspace(1),
                               F::quadric(0, 2, 0)};
    galilei.representable = false;
    v.push_back(std::move(galilei));
    return v;
  }();
  return entries;
}

/// Lookup by key ("euclidean-3d") or by "name, dim d" (case-insensitive).
inline const CKEntry& find_entry(std::string_view query) {
  auto lower = [](std::string_view s) {
    std::string out;
    for (char c : s) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  std::string q = lower(query);
  for (const auto& e : catalog_entries())
    if (q == e.key || q == lower(e.name + ", dim " + std::to_string(e.dim))) return e;
  throw UnknownName("no catalog entry '" + std::string(query) + "'");
}

/// Named basis orderings: point bases and image bases used for the displacement matrices.
inline BasisOrdering named_ordering(const AlgebraSignature& sig, std::string_view name) {
  auto require = [&](AlgebraSignature want) {
    if (!(sig == want))
      throw UnknownName("ordering '" + std::string(name) + "' is defined for " + to_string(want) + ", not " +
                        to_string(sig));
  };
  if (name == "paper-se3") {
    require({3, 0, 1});
    return BasisOrdering::from_names(sig, {"e123", "e234", "e134", "e124"});
  }
  if (name == "paper-se2") {
    require({2, 0, 1});
    return BasisOrdering::from_names(sig, {"e12", "e23", "e13"});
  }
  if (name == "paper-se3-image") {
    require({3, 0, 1});
    return BasisOrdering::from_names(sig, {"e0", "e23", "e13", "e12", "e1234", "e14", "e24", "e34"});
  }
  if (name == "paper-se2-image") {
    require({2, 0, 1});
    return BasisOrdering::from_names(sig, {"e0", "e12", "e13", "e23"});
  }
  if (name == "full") return BasisOrdering::full(sig);
  if (name == "even") return BasisOrdering::even(sig);
  if (name.starts_with("grade-")) {
    int k = 0;
    auto rest = name.substr(6);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec != std::errc{} || ptr != rest.data() + rest.size()) throw UnknownName("bad ordering '" + std::string(name) + "'");
    return BasisOrdering::grade(sig, k);
  }
  throw UnknownName("unknown basis ordering '" + std::string(name) + "'");
}

/// Default point basis: the named one where recorded, grade n-1 otherwise.
inline BasisOrdering default_point_ordering(const AlgebraSignature& sig) {
  if (sig == AlgebraSignature(3, 0, 1)) return named_ordering(sig, "paper-se3");
  if (sig == AlgebraSignature(2, 0, 1)) return named_ordering(sig, "paper-se2");
  return BasisOrdering::grade(sig, sig.n() - 1);
}

inline BasisOrdering default_image_ordering(const AlgebraSignature& sig) {
  if (sig == AlgebraSignature(3, 0, 1)) return named_ordering(sig, "paper-se3-image");
  if (sig == AlgebraSignature(2, 0, 1)) return named_ordering(sig, "paper-se2-image");
  return BasisOrdering::even(sig);
}

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string key;
  std::vector<VerifyCheck> checks;
  std::vector<std::string> substitutions;

  [[nodiscard]] bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
  }
};

namespace detail {

inline bool same_shape(const Inertia& a, const Inertia& b) {
  return a.zero == b.zero && ((a.positive == b.positive && a.negative == b.negative) ||
                              (a.positive == b.negative && a.negative == b.positive));
}

inline std::string inertia_text(const Inertia& i) {
  return "(+" + std::to_string(i.positive) + ", -" + std::to_string(i.negative) + ", 0x" + std::to_string(i.zero) + ")";
}

}  // namespace detail

/// Derives the variety of every listed signature and compares it to the recorded data.
inline VerifyReport verify_entry(const CKEntry& entry) {
  if (!entry.representable || entry.signatures.empty())
    throw NotRepresentable("'" + entry.name + "' has no homogeneous Clifford algebra model");
  VerifyReport report{entry.key, {}, {}};
  const AlgebraSignature first = entry.signatures.front();
  const VarietySpec spec = derive_spin_variety(first);
  const std::string on = " on " + to_string(first);

  if (entry.expected_exceptional) {
    QuadricForm expected(parse_polynomial(*entry.expected_exceptional));
    const auto& derived = spec.exceptional;
    bool literal = derived == expected;
    bool flipped = !literal && derived.polynomial() == -expected.polynomial();
    if (flipped) report.substitutions.push_back("exceptional quadric compared up to overall sign");
    report.checks.push_back({"exceptional" + on, literal || flipped,
                             "derived " + to_string(derived) + ", recorded " + to_string(expected)});
  }

  {
    std::vector<QuadricForm> expected;
    for (const auto& s : entry.expected_constraints) expected.emplace_back(parse_polynomial(s));
    auto derived = spec.constraint_forms();
    bool ok = derived.size() == expected.size() && same_span(derived, expected);
    std::string shown;
    for (const auto& f : derived) shown += (shown.empty() ? "" : "; ") + to_string(f);
    report.checks.push_back({"constraints" + on, ok,
                             std::to_string(derived.size()) + " derived" + (shown.empty() ? "" : ": " + shown)});
  }

  const Inertia shape = inertia(spec.exceptional.symmetric_matrix(naming_variables(naming_convention(first))));

  if (entry.exceptional_without_real_points) {
    bool definite = shape.zero == 0 && (shape.negative == 0 || shape.positive == 0);
    report.checks.push_back({"exceptional quadric has no real point", definite, detail::inertia_text(shape)});
  }

  if (entry.image_space) {
    const auto& head = entry.image_space->figure.front();
    bool ok = head.kind == FigureElement::Kind::quadric && shape.rank() == static_cast<std::size_t>(head.rank) &&
              shape.index() == static_cast<std::size_t>(head.index);
    report.checks.push_back({"image quadric " + entry.image_space->name, ok,
                             "derived rank " + std::to_string(shape.rank()) + " index " + std::to_string(shape.index()) +
                                 ", recorded " + to_string(AbsoluteFigure{head})});
  }

  for (std::size_t k = 1; k < entry.signatures.size(); ++k) {
    const auto sig = entry.signatures[k];
    VarietySpec other = derive_spin_variety(sig);
    Inertia s = inertia(other.exceptional.symmetric_matrix(naming_variables(naming_convention(sig))));
    bool ok = detail::same_shape(shape, s) && other.constraints.size() == spec.constraints.size();
    report.checks.push_back({"shape on " + to_string(sig), ok,
                             detail::inertia_text(s) + " vs " + detail::inertia_text(shape) + ", " +
                                 std::to_string(other.constraints.size()) + " constraints"});
  }
  return report;
}

inline std::string to_string(const VerifyReport& r) {
  std::string s = r.key + ": " + (r.passed() ? "PASS" : "FAIL") + "\n";
  for (const auto& c : r.checks) s += std::string("  [") + (c.passed ? "ok" : "MISMATCH") + "] " + c.name + ": " + c.detail + "\n";
  for (const auto& sub : r.substitutions) s += "  note: " + sub + "\n";
  return s;
}

}  // namespace cliffkin
