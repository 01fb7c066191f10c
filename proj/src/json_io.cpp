#include "cubecert/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cubecert/errors.hpp"

namespace cubecert {

namespace {

Vector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty numeric array");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = j[i].get<double>();
  return v;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

}  // namespace

Polytope polytope_from_json(const Json& j) {
  if (!j.contains("dim") || !j.contains("halfspaces")) throw ParseError("missing dim/halfspaces");
  const int n = j.at("dim").get<int>();
  std::vector<Halfspace> hs;
  for (const Json& h : j.at("halfspaces")) {
    Vector normal = vector_from_json(h.at("normal"));
    if (normal.size() != n) throw ParseError("halfspace normal has wrong dimension");
    hs.push_back({normal, h.at("offset").get<double>()});
  }
  return Polytope::from_halfspaces(hs);
}

Polytope section_from_json(const Json& j) {
  if (!j.contains("N") || !j.contains("basis")) throw ParseError("missing N/basis");
  const int big_n = j.at("N").get<int>();
  const Json& rows = j.at("basis");
  if (!rows.is_array() || rows.empty()) throw ParseError("basis must be a nonempty matrix");
  Matrix basis(rows.size(), big_n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Vector row = vector_from_json(rows[i]);
    if (row.size() != big_n) throw ParseError("basis row has wrong length");
    basis.row(i) = row.transpose();
  }
  return Polytope::cube_section(big_n, basis);
}

Polytope load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (j.contains("basis")) return section_from_json(j);
  return polytope_from_json(j);
}

Json polytope_to_json(const Polytope& p) {
  Json out;
  out["dim"] = p.dim();
  out["halfspaces"] = Json::array();
  for (const Halfspace& h : p.halfspaces()) {
    out["halfspaces"].push_back({{"normal", vector_to_json(h.normal)}, {"offset", h.offset}});
  }
  return out;
}

Json hypothesis_to_json(const HypothesisReport& report) {
  Json out;
  out["mode"] = to_string(report.mode);
  out["pass"] = report.pass;
  out["entries"] = Json::array();
  for (const HypothesisEntry& e : report.entries) {
    out["entries"].push_back({{"face", e.face_id},
                              {"codim", e.codim},
                              {"distance", e.distance},
                              {"threshold", e.threshold},
                              {"margin", e.margin}});
  }
  return out;
}

Json certificate_to_json(const Certificate& cert) {
  Json out;
  out["kind"] = cert.kind == CertificateKind::volume ? "volume" : "surface";
  out["mode"] = to_string(cert.mode);
  out["dim"] = cert.dim;
  out["claimed_bound"] = cert.claimed_bound;
  out["total"] = cert.total;
  out["omega_sum"] = cert.omega_sum;
  out["pass"] = cert.pass;
  out["hypothesis"] = hypothesis_to_json(cert.hypothesis);
  out["simplices"] = Json::array();
  for (const SimplexLedgerEntry& e : cert.simplices) {
    Json entry;
    entry["flag"] = e.flag_id;
    entry["degenerate"] = e.degenerate;
    entry["vol"] = e.volume;
    entry["omega"] = e.omega;
    if (cert.kind == CertificateKind::surface) entry["facet_area"] = e.facet_area;
    entry["margin"] = e.margin;
    out["simplices"].push_back(entry);
  }
  return out;
}

Json subdivision_to_json(const std::vector<SimplexTriple>& triples) {
  Json out = Json::array();
  for (const SimplexTriple& t : triples) {
    Json entry;
    entry["flag"] = t.flag.face_ids;
    Json a = Json::array(), b = Json::array();
    for (const Vector& v : t.a) a.push_back(vector_to_json(v));
    for (const Vector& v : t.b) b.push_back(vector_to_json(v));
    entry["a"] = a;
    entry["b"] = b;
    entry["degenerate"] = t.degenerate;
    out.push_back(entry);
  }
  return out;
}

std::string subdivision_to_off(const std::vector<SimplexTriple>& triples) {
  if (triples.empty() || triples.front().a.front().size() != 3)
    throw UnsupportedDimensionError("OFF export supports 3-dimensional subdivisions");
  std::ostringstream out;
  std::vector<const SimplexTriple*> live;
  for (const SimplexTriple& t : triples) {
    if (!t.degenerate) live.push_back(&t);
  }
  out << "OFF\n" << 4 * live.size() << " " << 4 * live.size() << " 0\n";
  out.precision(17);
  for (const SimplexTriple* t : live) {
    for (const Vector& v : t->a) out << v[0] << " " << v[1] << " " << v[2] << "\n";
  }
  static const int kFaces[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (const auto& f : kFaces) {
      out << "3 " << 4 * i + f[0] << " " << 4 * i + f[1] << " " << 4 * i + f[2] << "\n";
    }
  }
  return out.str();
}

}  // namespace cubecert
