#include "q6j/morse.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace q6j {

using nlohmann::json;

cplx MorseDiagram::color(const std::string& edge) const {
  auto it = colors.find(edge);
  if (it == colors.end())
    throw Error(ErrorCode::BadDiagram, "edge '" + edge + "' has no color");
  return it->second;
}

cplx MorseDiagram::effective(const Strand& s, const RootContext& ctx) const {
  cplx c = color(s.edge);
  return s.dir == Dir::Down ? c : cplx(double(ctx.n() - 1), 0.0) - c;
}

std::vector<std::vector<Strand>> MorseDiagram::levels() const {
  std::vector<std::vector<Strand>> out;
  std::vector<Strand> cur{{open_edge, Dir::Down}};
  out.push_back(cur);
  int idx = 0;
  for (const Event& ev : events) {
    auto fail = [&](const std::string& msg) {
      throw Error(ErrorCode::BadDiagram,
                  "event " + std::to_string(idx) + ": " + msg);
    };
    int p = ev.pos;
    auto need = [&](int count) {
      if (p < 0 || p + count > int(cur.size())) fail("position out of range");
    };
    switch (ev.kind) {
      case Event::Kind::Max: {
        if (p < 0 || p > int(cur.size())) fail("position out of range");
        if (colors.find(ev.edge) == colors.end()) fail("unknown edge " + ev.edge);
        Strand l{ev.edge, ev.down_left ? Dir::Down : Dir::Up};
        Strand r{ev.edge, ev.down_left ? Dir::Up : Dir::Down};
        cur.insert(cur.begin() + p, {l, r});
        break;
      }
      case Event::Kind::Min: {
        need(2);
        if (cur[p].edge != cur[p + 1].edge) fail("minimum joins different edges");
        if (cur[p].dir == cur[p + 1].dir) fail("minimum needs opposite orientations");
        cur.erase(cur.begin() + p, cur.begin() + p + 2);
        break;
      }
      case Event::Kind::Crossing: {
        need(2);
        std::swap(cur[p], cur[p + 1]);
        break;
      }
      case Event::Kind::Split: {
        need(1);
        if (colors.find(ev.left.edge) == colors.end() ||
            colors.find(ev.right.edge) == colors.end())
          fail("split references an unknown edge");
        cur[p] = ev.left;
        cur.insert(cur.begin() + p + 1, ev.right);
        break;
      }
      case Event::Kind::Merge: {
        need(2);
        if (colors.find(ev.out.edge) == colors.end())
          fail("merge references an unknown edge");
        cur.erase(cur.begin() + p);
        cur[p] = ev.out;
        break;
      }
    }
    out.push_back(cur);
    ++idx;
  }
  if (cur.size() != 1 || cur[0].edge != open_edge || cur[0].dir != Dir::Down)
    throw Error(ErrorCode::BadDiagram,
                "bottom boundary must be the single downward open edge");
  return out;
}

MorseDiagram MorseDiagram::recolored(const std::map<std::string, cplx>& newColors) const {
  MorseDiagram d = *this;
  for (const auto& [k, v] : newColors) {
    if (d.colors.find(k) == d.colors.end())
      throw Error(ErrorCode::BadDiagram, "recoloring unknown edge " + k);
    d.colors[k] = v;
  }
  return d;
}

const MorseDiagram& DiagramFile::presentation(const std::string& cut) const {
  auto it = presentations.find(cut);
  if (it == presentations.end())
    throw Error(ErrorCode::BadInput, "no presentation cut along '" + cut + "'");
  return it->second;
}

const MorseDiagram& DiagramFile::first() const {
  if (presentations.empty())
    throw Error(ErrorCode::BadInput, "diagram file has no presentations");
  return presentations.begin()->second;
}

namespace {

cplx color_from_json(const json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  return cplx(j.at(0).get<double>(), j.at(1).get<double>());
}

Strand strand_from_json(const json& j) {
  Strand s;
  s.edge = j.at(0).get<std::string>();
  std::string d = j.at(1).get<std::string>();
  if (d != "down" && d != "up")
    throw Error(ErrorCode::BadInput, "strand direction must be 'down' or 'up'");
  s.dir = d == "down" ? Dir::Down : Dir::Up;
  return s;
}

json strand_to_json(const Strand& s) {
  return json::array({s.edge, s.dir == Dir::Down ? "down" : "up"});
}

Event event_from_json(const json& j) {
  Event ev;
  std::string type = j.at("type").get<std::string>();
  ev.pos = j.at("pos").get<int>();
  if (type == "max") {
    ev.kind = Event::Kind::Max;
    ev.edge = j.at("edge").get<std::string>();
    ev.down_left = j.value("down", "left") == std::string("left");
  } else if (type == "min") {
    ev.kind = Event::Kind::Min;
  } else if (type == "crossing") {
    ev.kind = Event::Kind::Crossing;
    ev.sign = j.at("sign").get<int>();
    if (ev.sign != 1 && ev.sign != -1)
      throw Error(ErrorCode::BadInput, "crossing sign must be +1 or -1");
  } else if (type == "split") {
    ev.kind = Event::Kind::Split;
    ev.left = strand_from_json(j.at("left"));
    ev.right = strand_from_json(j.at("right"));
  } else if (type == "merge") {
    ev.kind = Event::Kind::Merge;
    ev.out = strand_from_json(j.at("out"));
  } else {
    throw Error(ErrorCode::BadInput, "unknown event type '" + type + "'");
  }
  return ev;
}

json event_to_json(const Event& ev) {
  json j;
  j["pos"] = ev.pos;
  switch (ev.kind) {
    case Event::Kind::Max:
      j["type"] = "max";
      j["edge"] = ev.edge;
      j["down"] = ev.down_left ? "left" : "right";
      break;
    case Event::Kind::Min:
      j["type"] = "min";
      break;
    case Event::Kind::Crossing:
      j["type"] = "crossing";
      j["sign"] = ev.sign;
      break;
    case Event::Kind::Split:
      j["type"] = "split";
      j["left"] = strand_to_json(ev.left);
      j["right"] = strand_to_json(ev.right);
      break;
    case Event::Kind::Merge:
      j["type"] = "merge";
      j["out"] = strand_to_json(ev.out);
      break;
  }
  return j;
}

}  // namespace

DiagramFile parse_diagram_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::BadInput, std::string("diagram parse error: ") + e.what());
  }
  DiagramFile f;
  f.name = j.value("name", "");
  std::map<std::string, cplx> colors;
  for (auto& [k, v] : j.at("edges").items()) colors[k] = color_from_json(v.at("color"));
  auto load_presentation = [&](const std::string& cut, const json& pj) {
    MorseDiagram d;
    d.name = f.name;
    d.colors = colors;
    d.open_edge = pj.value("open_edge", cut);
    for (const json& e : pj.at("events")) d.events.push_back(event_from_json(e));
    d.levels();  // validate now
    f.presentations[cut] = std::move(d);
  };
  if (j.contains("presentations")) {
    for (auto& [cut, pj] : j.at("presentations").items()) load_presentation(cut, pj);
  } else {
    load_presentation(j.at("open_edge").get<std::string>(), j);
  }
  return f;
}

DiagramFile load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram_json(ss.str());
}

std::string diagram_file_to_json(const DiagramFile& f) {
  json j;
  j["name"] = f.name;
  json edges = json::object();
  const MorseDiagram& any = f.first();
  for (const auto& [k, v] : any.colors)
    edges[k] = {{"color", {v.real(), v.imag()}}};
  j["edges"] = edges;
  json pres = json::object();
  for (const auto& [cut, d] : f.presentations) {
    json pj;
    pj["open_edge"] = d.open_edge;
    json evs = json::array();
    for (const Event& e : d.events) evs.push_back(event_to_json(e));
    pj["events"] = evs;
    pres[cut] = pj;
  }
  j["presentations"] = pres;
  return j.dump(2) + "\n";
}

}  // namespace q6j
