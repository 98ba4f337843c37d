#include "q6j/diagrams.hpp"

#include <array>

namespace q6j {
namespace diagrams {

namespace {

Event max_ev(int pos, const std::string& edge, bool down_left) {
  Event e;
  e.kind = Event::Kind::Max;
  e.pos = pos;
  e.edge = edge;
  e.down_left = down_left;
  return e;
}

Event min_ev(int pos) {
  Event e;
  e.kind = Event::Kind::Min;
  e.pos = pos;
  return e;
}

Event cross_ev(int pos, int sign) {
  Event e;
  e.kind = Event::Kind::Crossing;
  e.pos = pos;
  e.sign = sign;
  return e;
}

Event split_ev(int pos, Strand left, Strand right) {
  Event e;
  e.kind = Event::Kind::Split;
  e.pos = pos;
  e.left = left;
  e.right = right;
  return e;
}

Event merge_ev(int pos, Strand out) {
  Event e;
  e.kind = Event::Kind::Merge;
  e.pos = pos;
  e.out = out;
  return e;
}

// closure of a braid word on `width` strands, cut open along strand 1;
// positive letters use the convention that the strand entering from the
// upper right passes over
MorseDiagram braid_closure(const std::string& name, cplx color, int width,
                           const std::vector<std::pair<int, int>>& word) {
  MorseDiagram d;
  d.name = name;
  d.colors["K"] = color;
  d.open_edge = "K";
  for (int i = 1; i < width; ++i) d.events.push_back(max_ev(i, "K", true));
  for (auto [pos, sign] : word) d.events.push_back(cross_ev(pos, sign));
  for (int i = width - 1; i >= 1; --i) d.events.push_back(min_ev(i));
  return d;
}

}  // namespace

MorseDiagram unknot(cplx color) {
  MorseDiagram d;
  d.name = "unknot";
  d.colors["K"] = color;
  d.open_edge = "K";
  return d;
}

MorseDiagram unknot_zigzag(cplx color) {
  MorseDiagram d = unknot(color);
  d.events.push_back(max_ev(1, "K", false));  // left leg rises into the arch
  d.events.push_back(min_ev(0));
  return d;
}

MorseDiagram unknot_curl(cplx color, int sign) {
  MorseDiagram d = unknot(color);
  d.events.push_back(max_ev(1, "K", true));
  d.events.push_back(cross_ev(0, sign));
  d.events.push_back(min_ev(1));
  return d;
}

MorseDiagram theta(cplx a, cplx b, cplx c, char cut) {
  MorseDiagram d;
  d.name = "theta";
  d.colors = {{"a", a}, {"b", b}, {"c", c}};
  // orientations: a flows V2 -> V1, b and c flow V1 -> V2
  switch (cut) {
    case 'a':
      d.open_edge = "a";
      d.events.push_back(split_ev(0, {"b", Dir::Down}, {"c", Dir::Down}));
      d.events.push_back(merge_ev(0, {"a", Dir::Down}));
      break;
    case 'b':
      d.open_edge = "b";
      d.events.push_back(split_ev(0, {"a", Dir::Down}, {"c", Dir::Up}));
      d.events.push_back(merge_ev(0, {"b", Dir::Down}));
      break;
    case 'c':
      d.open_edge = "c";
      d.events.push_back(split_ev(0, {"a", Dir::Down}, {"b", Dir::Up}));
      d.events.push_back(merge_ev(0, {"c", Dir::Down}));
      break;
    default:
      throw Error(ErrorCode::BadInput, "theta cut must be a, b or c");
  }
  return d;
}

MorseDiagram tetrahedron(const TetColors& col, char cut) {
  // vertices P, Q, R, S with incident edges
  //   P: a in, b in, e out;  Q: c in, a out, f out;
  //   R: f in, b out, d out; S: e in, d in, c out.
  // Cutting edge X = U -> V puts V on top; the rest forms a diamond
  //   V -> {W1, W2} -> U with the W1-W2 edge drawn on the right.
  struct EdgeInfo {
    char tail, head;  // oriented tail -> head
  };
  std::map<char, EdgeInfo> edges = {{'a', {'Q', 'P'}}, {'b', {'R', 'P'}},
                                    {'c', {'S', 'Q'}}, {'d', {'R', 'S'}},
                                    {'e', {'P', 'S'}}, {'f', {'Q', 'R'}}};
  std::map<char, cplx> colmap = {{'a', col.a}, {'b', col.b}, {'c', col.c},
                                 {'d', col.d}, {'e', col.e}, {'f', col.f}};
  if (edges.find(cut) == edges.end())
    throw Error(ErrorCode::BadInput, "tetrahedron cut must be one of a..f");

  char V = edges[cut].head, U = edges[cut].tail;
  // find the connecting edges of the diamond
  auto edge_between = [&](char x, char y) {
    for (auto& [name, info] : edges) {
      if (name == cut) continue;
      if ((info.tail == x && info.head == y) || (info.tail == y && info.head == x))
        return name;
    }
    throw Error(ErrorCode::BadInput, "tetrahedron edge lookup failed");
  };
  std::array<char, 4> all = {'P', 'Q', 'R', 'S'};
  std::vector<char> others;
  for (char v : all)
    if (v != V && v != U) others.push_back(v);
  char W1 = others[0], W2 = others[1];

  char p = edge_between(V, W1), q = edge_between(V, W2);
  char r = edge_between(W1, W2), s = edge_between(W1, U), t = edge_between(W2, U);

  // a strand between an upper and a lower vertex flows down when its
  // orientation goes upper -> lower
  auto strand = [&](char name, char upper) {
    return Strand{std::string(1, name),
                  edges[name].tail == upper ? Dir::Down : Dir::Up};
  };

  MorseDiagram d;
  d.name = "tetrahedron";
  for (auto& [k, v] : colmap) d.colors[std::string(1, k)] = v;
  d.open_edge = std::string(1, cut);
  d.events.push_back(split_ev(0, strand(p, V), strand(q, V)));
  d.events.push_back(split_ev(0, strand(s, W1), strand(r, W1)));
  d.events.push_back(merge_ev(1, strand(t, W2)));
  d.events.push_back(merge_ev(0, {std::string(1, cut), Dir::Down}));
  return d;
}

MorseDiagram hopf(cplx k, cplx a) {
  MorseDiagram d;
  d.name = "hopf";
  d.colors = {{"K", k}, {"A", a}};
  d.open_edge = "K";
  d.events.push_back(max_ev(1, "A", true));
  d.events.push_back(cross_ev(0, +1));
  d.events.push_back(cross_ev(0, +1));
  d.events.push_back(min_ev(1));
  return d;
}

MorseDiagram trefoil(cplx color) {
  return braid_closure("trefoil", color, 2, {{0, 1}, {0, 1}, {0, 1}});
}

MorseDiagram figure_eight(cplx color) {
  return braid_closure("figure_eight", color, 3,
                       {{0, 1}, {1, -1}, {0, 1}, {1, -1}});
}

namespace {

DiagramFile single(const MorseDiagram& d) {
  DiagramFile f;
  f.name = d.name;
  f.presentations[d.open_edge] = d;
  return f;
}

}  // namespace

DiagramFile unknot_file() {
  DiagramFile f;
  f.name = "unknot";
  f.presentations["K"] = unknot(cplx(0.2137, 0.0));
  f.presentations["K_zigzag"] = unknot_zigzag(cplx(0.2137, 0.0));
  return f;
}

DiagramFile theta_file() {
  DiagramFile f;
  f.name = "theta";
  cplx a(0.58, 0.0), b(0.31, 0.0), c(0.27, 0.0);  // b+c-a = 0
  for (char cut : {'a', 'b', 'c'}) f.presentations[std::string(1, cut)] = theta(a, b, c, cut);
  return f;
}

DiagramFile tetrahedron_file() {
  DiagramFile f;
  f.name = "tetrahedron";
  // potentials 0.91, 0.605, 0.31, 0.1234 with offsets giving combinations
  // a+b-e = 1, a+f-c = 0, b+d-f = 1, d+e-c = 0, valid at every n >= 2
  TetColors col{cplx(0.305, 0.0),  cplx(0.295, 0.0), cplx(0.7866, 0.0),
                cplx(1.1866, 0.0), cplx(-0.4, 0.0),  cplx(0.4816, 0.0)};
  for (char cut : {'a', 'b', 'c', 'd', 'e', 'f'})
    f.presentations[std::string(1, cut)] = tetrahedron(col, cut);
  return f;
}

DiagramFile hopf_file() { return single(hopf(cplx(0.2137, 0.0), cplx(0.377, 0.0))); }

DiagramFile trefoil_file() { return single(trefoil(cplx(0.2137, 0.0))); }

DiagramFile figure_eight_file() { return single(figure_eight(cplx(0.2137, 0.0))); }

}  // namespace diagrams
}  // namespace q6j
