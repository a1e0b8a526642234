#include "hac/json_io.hpp"

namespace hac {

Json rational_to_json(const Rational& q) { return to_fraction_string(q); }

Rational rational_from_json(const Json& j) {
  require(j.is_string(), ErrorKind::ParseError, "rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Json interval_to_json(const Interval& iv) {
  return Json::array({rational_to_json(iv.lo), rational_to_json(iv.hi)});
}

Interval interval_from_json(const Json& j) {
  require(j.is_array() && j.size() == 2, ErrorKind::ParseError, "interval must be [lo, hi]");
  return Interval(rational_from_json(j[0]), rational_from_json(j[1]));
}

Json pl_to_json(const PLMap& m) {
  Json j;
  j["domain"] = Json::array(
      {rational_to_json(m.points().front().x), rational_to_json(m.points().back().x)});
  j["codomain"] = Json::array(
      {rational_to_json(m.points().front().y), rational_to_json(m.points().back().y)});
  Json pts = Json::array();
  for (const auto& p : m.points())
    pts.push_back(Json::array({rational_to_json(p.x), rational_to_json(p.y)}));
  j["points"] = std::move(pts);
  return j;
}

namespace {

std::vector<Breakpoint> points_from_json(const Json& j) {
  require(j.is_object() && j.contains("points") && j["points"].is_array(), ErrorKind::ParseError,
          "PL map needs a points array");
  std::vector<Breakpoint> pts;
  for (const auto& item : j["points"]) {
    require(item.is_array() && item.size() == 2, ErrorKind::ParseError,
            "breakpoint must be [x, y]");
    pts.push_back({rational_from_json(item[0]), rational_from_json(item[1])});
  }
  if (j.contains("domain")) {
    Interval dom = interval_from_json(j["domain"]);
    require(!pts.empty() && pts.front().x == dom.lo && pts.back().x == dom.hi,
            ErrorKind::ParseError, "domain field disagrees with the points");
  }
  if (j.contains("codomain")) {
    Interval cod = interval_from_json(j["codomain"]);
    require(!pts.empty() && pts.front().y == cod.lo && pts.back().y == cod.hi,
            ErrorKind::ParseError, "codomain field disagrees with the points");
  }
  return pts;
}

}  // namespace

PLMap pl_map_from_json(const Json& j) { return PLMap::from_points(points_from_json(j)); }

PLHomeo pl_homeo_from_json(const Json& j) { return PLHomeo::from_points(points_from_json(j)); }

Json fixed_set_to_json(const FixedSet& fs) {
  Json j;
  Json pts = Json::array();
  for (const auto& p : fs.points) pts.push_back(rational_to_json(p));
  Json ivs = Json::array();
  for (const auto& iv : fs.intervals) ivs.push_back(interval_to_json(iv));
  j["points"] = std::move(pts);
  j["intervals"] = std::move(ivs);
  return j;
}

Json orbitals_to_json(const std::vector<Orbital>& orbs) {
  Json j = Json::array();
  for (const auto& o : orbs) {
    Json item;
    item["span"] = interval_to_json(o.span);
    item["parity"] = o.parity;
    j.push_back(std::move(item));
  }
  return j;
}

Json genericity_to_json(const GenericityReport& report) {
  Json j;
  j["is_cantor"] = report.is_cantor;
  j["mixing"] = report.mixing;
  j["null_fixed"] = report.null_fixed;
  j["fixed_measure"] = rational_to_json(report.fixed_measure);
  j["fixed_measure_decimal"] = to_decimal_string(report.fixed_measure);
  j["witnesses"] = report.witnesses;
  return j;
}

Json signature_to_json(const OrbitalSignature& sig) {
  Json j = Json::array();
  for (const auto& t : sig.tokens) {
    switch (t) {
      case SigToken::FixedPoint: j.push_back("pt"); break;
      case SigToken::FixedInterval: j.push_back("iv"); break;
      case SigToken::PosOrbital: j.push_back("+1"); break;
      case SigToken::NegOrbital: j.push_back("-1"); break;
    }
  }
  return j;
}

namespace {

Json node_to_json(const LazyHomeo::Node& node) {
  using Kind = LazyHomeo::Kind;
  Json j;
  switch (node.kind) {
    case Kind::Atom:
      j["kind"] = "atom";
      j["pl"] = pl_to_json(*node.atom);
      break;
    case Kind::Compose:
      j["kind"] = "compose";
      j["outer"] = node_to_json(*node.children[0]);
      j["inner"] = node_to_json(*node.children[1]);
      break;
    case Kind::Inverse:
      j["kind"] = "inverse";
      j["of"] = node_to_json(*node.children[0]);
      break;
    case Kind::Power:
      j["kind"] = "power";
      j["base"] = node_to_json(*node.children[0]);
      j["n"] = node.exponent;
      break;
    case Kind::Piecewise: {
      j["kind"] = "piecewise";
      Json pieces = Json::array();
      for (const auto& c : node.children) pieces.push_back(node_to_json(*c));
      j["pieces"] = std::move(pieces);
      break;
    }
    case Kind::Tiled: {
      j["kind"] = "tiled";
      j["scaler"] = pl_to_json(node.pl[0]);
      Json phis = Json::array();
      for (std::size_t i = 1; i < node.pl.size(); ++i) phis.push_back(pl_to_json(node.pl[i]));
      j["phis"] = std::move(phis);
      j["x0"] = rational_to_json(*node.x0);
      break;
    }
    case Kind::OrbitExt:
      j["kind"] = "orbit_extension";
      j["f"] = pl_to_json(node.pl[0]);
      j["g"] = pl_to_json(node.pl[1]);
      j["h0"] = pl_to_json(node.pl[2]);
      j["x0"] = rational_to_json(*node.x0);
      j["y0"] = rational_to_json(*node.y0);
      break;
  }
  return j;
}

}  // namespace

Json lazy_to_json(const LazyHomeo& h) { return node_to_json(*h.root()); }

LazyHomeo lazy_from_json(const Json& j) {
  require(j.is_object() && j.contains("kind"), ErrorKind::ParseError,
          "lazy map node needs a kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "atom") return LazyHomeo::atom(pl_homeo_from_json(j.at("pl")));
  if (kind == "compose")
    return LazyHomeo::compose(lazy_from_json(j.at("outer")), lazy_from_json(j.at("inner")));
  if (kind == "inverse") return LazyHomeo::inverse(lazy_from_json(j.at("of")));
  if (kind == "power")
    return LazyHomeo::power(lazy_from_json(j.at("base")), j.at("n").get<long>());
  if (kind == "piecewise") {
    std::vector<LazyHomeo> pieces;
    for (const auto& p : j.at("pieces")) pieces.push_back(lazy_from_json(p));
    return LazyHomeo::piecewise(std::move(pieces));
  }
  if (kind == "tiled") {
    std::vector<PLHomeo> phis;
    for (const auto& p : j.at("phis")) phis.push_back(pl_homeo_from_json(p));
    return LazyHomeo::tiled(pl_homeo_from_json(j.at("scaler")), std::move(phis),
                            rational_from_json(j.at("x0")));
  }
  if (kind == "orbit_extension")
    return LazyHomeo::orbit_extension(pl_homeo_from_json(j.at("f")),
                                      pl_homeo_from_json(j.at("g")),
                                      pl_homeo_from_json(j.at("h0")),
                                      rational_from_json(j.at("x0")),
                                      rational_from_json(j.at("y0")));
  fail(ErrorKind::ParseError, "unknown lazy map kind '" + kind + "'");
}

Json generator_pair_to_json(const GeneratorPair& pair) {
  Json j;
  j["g_tilde"] = pl_to_json(pair.g_tilde);
  j["interpolant"] = pl_to_json(pair.interpolant);
  j["f_upper"] = pl_to_json(pair.f_upper);
  Json phis = Json::array();
  for (const auto& phi : pair.phis) phis.push_back(pl_to_json(phi));
  j["phis"] = std::move(phis);
  j["alpha"] = rational_to_json(pair.alpha);
  j["y0"] = rational_to_json(pair.y0);
  j["x0"] = rational_to_json(pair.x0);
  j["delta"] = rational_to_json(pair.delta);
  j["rho_g_bound"] = rational_to_json(pair.rho_g_bound);
  j["rho_f_bound"] = rational_to_json(pair.rho_f_bound);
  return j;
}

GeneratorPair generator_pair_from_json(const Json& j) {
  PLHomeo g_tilde = pl_homeo_from_json(j.at("g_tilde"));
  PLHomeo interp = pl_homeo_from_json(j.at("interpolant"));
  PLHomeo f_upper = pl_homeo_from_json(j.at("f_upper"));
  std::vector<PLHomeo> phis;
  for (const auto& p : j.at("phis")) phis.push_back(pl_homeo_from_json(p));
  Rational x0 = rational_from_json(j.at("x0"));
  LazyHomeo f_tilde = LazyHomeo::piecewise({
      LazyHomeo::tiled(g_tilde, phis, x0),
      LazyHomeo::atom(interp),
      LazyHomeo::atom(f_upper),
  });
  return GeneratorPair{std::move(f_tilde),
                       std::move(g_tilde),
                       std::move(interp),
                       std::move(f_upper),
                       std::move(phis),
                       rational_from_json(j.at("alpha")),
                       rational_from_json(j.at("y0")),
                       std::move(x0),
                       rational_from_json(j.at("delta")),
                       rational_from_json(j.at("rho_g_bound")),
                       rational_from_json(j.at("rho_f_bound"))};
}

}  // namespace hac
