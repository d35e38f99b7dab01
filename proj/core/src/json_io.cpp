#include "cubulate/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "cubulate/error.hpp"

namespace cubulate::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::malformed_input, what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) malformed(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) malformed(where + ": missing \"" + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) malformed(where + ": expected an integer");
  return j.get<int>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) malformed(where + ": expected an array");
  return j;
}

// Runs a loader, turning library exceptions into malformed_input.
template <typename F>
auto guarded(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::malformed_input) throw;
    throw Error(ErrorCode::malformed_input, where + ": " + e.what(), e.witness());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::malformed_input, where + ": " + e.what());
  }
}

}  // namespace

Json to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return Json::array({r.num(), r.den()});
}

Rational rational_from_json(const Json& j) {
  return guarded("rational", [&] {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_float()) return Rational::parse(j.dump());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
      return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
    }
    malformed("rational: expected integer, decimal, \"p/q\" or [num, den]");
  });
}

Json to_json(const VertexSet& s) { return Json(s); }

VertexSet vertex_set_from_json(const Json& j) {
  as_array(j, "vertex set");
  VertexSet out;
  for (const Json& v : j) out.push_back(as_int(v, "vertex set"));
  if (make_vertex_set(out) != out) malformed("vertex set: must be sorted and duplicate-free");
  return out;
}

Json to_json(const UnitGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  Json j{{"n", g.size()}, {"edges", std::move(edges)}};
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

UnitGraph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    const int n = as_int(field(j, "n", "graph"), "graph.n");
    std::vector<Edge> edges;
    for (const Json& e : as_array(field(j, "edges", "graph"), "graph.edges")) {
      if (!e.is_array() || e.size() != 2) malformed("graph.edges: expected [u, v] pairs");
      edges.emplace_back(as_int(e[0], "graph.edges"), as_int(e[1], "graph.edges"));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return UnitGraph(n, std::move(edges), std::move(labels));
  });
}

Json to_json(const Wallspace& w) {
  Json walls = Json::array();
  for (const Wall& wall : w.walls) walls.push_back({wall.left, wall.right});
  return {{"points", w.points}, {"walls", std::move(walls)}};
}

Wallspace wallspace_from_json(const Json& j) {
  return guarded("wallspace", [&] {
    Wallspace w;
    w.points = as_int(field(j, "points", "wallspace"), "wallspace.points");
    for (const Json& wall : as_array(field(j, "walls", "wallspace"), "wallspace.walls")) {
      if (!wall.is_array() || wall.size() != 2) malformed("wallspace.walls: expected [left, right] pairs");
      w.walls.push_back({vertex_set_from_json(wall[0]), vertex_set_from_json(wall[1])});
    }
    validate_wallspace(w);
    return w;
  });
}

Json to_json(const CubeSkeleton& c) {
  return {{"graph", to_json(c.graph())}, {"edge_classes", c.edge_classes()}, {"dimension", c.dimension()}};
}

CubeSkeleton skeleton_from_json(const Json& j) {
  return guarded("skeleton", [&] {
    CubeSkeleton c = hyperplane_decomposition(MedianAlgebra::verified(graph_from_json(field(j, "graph", "skeleton"))));
    if (field(j, "edge_classes", "skeleton").get<std::vector<int>>() != c.edge_classes()) {
      malformed("skeleton.edge_classes: disagrees with the hyperplanes of the graph");
    }
    if (j.contains("dimension") && j.at("dimension").get<int>() != c.dimension()) malformed("skeleton.dimension: disagrees with the graph");
    return c;
  });
}

Json to_json(const ProjectionSystem& s) {
  Json pieces = Json::array();
  for (const UnitGraph& g : s.pieces) pieces.push_back(to_json(g));
  Json proj = Json::object();
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      if (i != j) proj[std::to_string(i) + "," + std::to_string(j)] = s.proj[i][j];
    }
  }
  return {{"pieces", std::move(pieces)}, {"proj", std::move(proj)}, {"theta", to_json(s.theta)}};
}

ProjectionSystem projection_system_from_json(const Json& j) {
  return guarded("projection system", [&] {
    ProjectionSystem s;
    for (const Json& g : as_array(field(j, "pieces", "projection system"), "pieces")) s.pieces.push_back(graph_from_json(g));
    const int n = s.size();
    s.proj.assign(n, std::vector<VertexSet>(n));
    const Json& proj = field(j, "proj", "projection system");
    if (!proj.is_object()) malformed("proj: expected an object keyed \"i,j\"");
    for (const auto& [key, value] : proj.items()) {
      int a = -1;
      int b = -1;
      char comma = 0;
      std::istringstream in(key);
      if (!(in >> a >> comma >> b) || comma != ',' || !in.eof() || a < 0 || b < 0 || a >= n || b >= n || a == b) {
        malformed("proj: bad key \"" + key + "\"");
      }
      s.proj[a][b] = vertex_set_from_json(value);
    }
    s.theta = rational_from_json(field(j, "theta", "projection system"));
    validate_projection_system(s);
    return s;
  });
}

Json to_json(const QuasiTreeSpace& q) {
  Json vertices = Json::array();
  for (int v = 0; v < q.size(); ++v) vertices.push_back({q.piece_of(v), q.local_of(v)});
  Json edges = Json::array();
  for (int p = 0; p < q.piece_count(); ++p) {
    for (const Edge& e : q.system().pieces[p].edges()) edges.push_back({q.global(p, e.first), q.global(p, e.second), to_json(Rational(1))});
  }
  for (const AttachmentEdge& e : q.attachments()) edges.push_back({e.a, e.b, Json::array({q.l().num(), q.l().den()})});
  return {{"system", to_json(q.system())}, {"K", to_json(q.k())}, {"L", to_json(q.l())}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

QuasiTreeSpace quasitree_from_json(const Json& j) {
  return guarded("quasitree", [&] {
    QuasiTreeSpace q(projection_system_from_json(field(j, "system", "quasitree")), rational_from_json(field(j, "K", "quasitree")),
                     rational_from_json(field(j, "L", "quasitree")));
    if (j.contains("edges") || j.contains("vertices")) {
      const Json again = to_json(q);
      if (j.contains("edges") && j.at("edges") != again.at("edges")) malformed("quasitree.edges: disagree with the rebuilt space");
      if (j.contains("vertices") && j.at("vertices") != again.at("vertices")) malformed("quasitree.vertices: disagree with the rebuilt space");
    }
    return q;
  });
}

Json to_json(const HHSInstance& h) {
  Json domains = Json::array();
  for (const Domain& d : h.domains) {
    Json rel = Json::object();
    Json rho = Json::object();
    Json rho_down = Json::object();
    for (std::size_t k = 0; k < h.domains.size(); ++k) {
      const std::string& other = h.domains[k].id;
      if (d.rel[k] != Relation::self) rel[other] = to_string(d.rel[k]);
      if (d.rho[k]) rho[other] = *d.rho[k];
      if (k < d.rho_down.size() && !d.rho_down[k].empty()) rho_down[other] = d.rho_down[k];
    }
    Json entry{{"id", d.id}, {"space", to_json(d.space)}, {"pi", d.pi}, {"rel", std::move(rel)}, {"rho", std::move(rho)}};
    if (!rho_down.empty()) entry["rho_down"] = std::move(rho_down);
    domains.push_back(std::move(entry));
  }
  return {{"ambient", to_json(h.ambient)}, {"E", to_json(h.e)}, {"domains", std::move(domains)}};
}

HHSInstance instance_from_json(const Json& j) {
  return guarded("instance", [&] {
    HHSInstance h;
    h.ambient = graph_from_json(field(j, "ambient", "instance"));
    h.e = rational_from_json(field(j, "E", "instance"));
    const Json& domains = as_array(field(j, "domains", "instance"), "instance.domains");
    const std::size_t m = domains.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < m; ++k) {
      const std::string id = field(domains[k], "id", "domain").get<std::string>();
      if (!index.emplace(id, k).second) malformed("instance.domains: repeated id \"" + id + "\"");
    }
    auto lookup = [&](const std::string& id, const std::string& where) {
      const auto it = index.find(id);
      if (it == index.end()) malformed(where + ": unknown domain id \"" + id + "\"");
      return it->second;
    };
    for (std::size_t k = 0; k < m; ++k) {
      const Json& dj = domains[k];
      Domain d;
      d.id = dj.at("id").get<std::string>();
      const std::string where = "domain " + d.id;
      d.space = graph_from_json(field(dj, "space", where));
      for (const Json& p : as_array(field(dj, "pi", where), where + ".pi")) d.pi.push_back(vertex_set_from_json(p));
      d.rel.assign(m, Relation::transverse);
      d.rel[k] = Relation::self;
      std::vector<char> seen(m, 0);
      seen[k] = 1;
      for (const auto& [other, value] : field(dj, "rel", where).items()) {
        const std::size_t o = lookup(other, where + ".rel");
        d.rel[o] = relation_from_string(value.get<std::string>());
        seen[o] = 1;
      }
      for (std::size_t o = 0; o < m; ++o) {
        if (!seen[o]) malformed(where + ".rel: no relation to \"" + domains[o].at("id").get<std::string>() + "\"");
      }
      d.rho.assign(m, std::nullopt);
      if (dj.contains("rho")) {
        for (const auto& [other, value] : dj.at("rho").items()) d.rho[lookup(other, where + ".rho")] = vertex_set_from_json(value);
      }
      if (dj.contains("rho_down")) {
        d.rho_down.assign(m, {});
        for (const auto& [other, value] : dj.at("rho_down").items()) {
          auto& row = d.rho_down[lookup(other, where + ".rho_down")];
          for (const Json& s : as_array(value, where + ".rho_down")) row.push_back(vertex_set_from_json(s));
        }
      }
      h.domains.push_back(std::move(d));
    }
    Hierarchy check(h);
    return h;
  });
}

Json to_json(const Colouring& c) { return {{"classes", c.classes}}; }

Colouring colouring_from_json(const Json& j) {
  return guarded("colouring", [&] {
    Colouring c;
    c.classes = field(j, "classes", "colouring").get<std::vector<std::vector<int>>>();
    int domains = 0;
    for (const auto& cls : c.classes) {
      for (int u : cls) domains = std::max(domains, u + 1);
    }
    c.colour_of.assign(domains, -1);
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
      for (int u : c.classes[i]) {
        if (u < 0 || c.colour_of[u] >= 0) malformed("colouring: domain listed twice or negative");
        c.colour_of[u] = static_cast<int>(i);
      }
    }
    return c;
  });
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::malformed_input, std::string("json: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::malformed_input, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::precondition, "cannot write " + tmp.string());
    out << dump(j);
    if (!out.flush()) throw Error(ErrorCode::precondition, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::precondition, "cannot rename onto " + path.string() + ": " + ec.message());
}

}  // namespace cubulate::io
