#pragma once

#include <map>
#include <string>
#include <vector>

#include "q6j/qarith.hpp"

namespace q6j {

// Orientation of an edge along a strand, relative to the downward sweep.
enum class Dir { Down, Up };

struct Strand {
  std::string edge;
  Dir dir = Dir::Down;
};

// One slice event of a sliced diagram, read top to bottom. Positions index
// the strand list before the event.
struct Event {
  enum class Kind { Max, Min, Crossing, Split, Merge };
  Kind kind;
  int pos = 0;
  // Max: the edge turning over and which leg carries the downward flow.
  std::string edge;
  bool down_left = true;
  // Crossing: +1 when the strand entering from the upper right passes over.
  int sign = +1;
  // Split (one strand above, two below): the two child strands.
  Strand left, right;
  // Merge (two strands above, one below): the output strand.
  Strand out;
};

// A colored oriented trivalent graph presented as a one-in one-out sliced
// diagram; both boundary strands carry the open edge, oriented downward.
struct MorseDiagram {
  std::string name;
  std::map<std::string, cplx> colors;
  std::string open_edge;
  std::vector<Event> events;

  cplx color(const std::string& edge) const;
  cplx effective(const Strand& s, const RootContext& ctx) const;

  // Strand lists per level: level k is the list above event k; the last
  // entry is the bottom boundary. Throws BadDiagram on any inconsistency.
  std::vector<std::vector<Strand>> levels() const;

  MorseDiagram recolored(const std::map<std::string, cplx>& newColors) const;
};

// A diagram file may carry one presentation per choice of cut edge.
struct DiagramFile {
  std::string name;
  std::map<std::string, MorseDiagram> presentations;

  const MorseDiagram& presentation(const std::string& cut) const;
  const MorseDiagram& first() const;
};

DiagramFile load_diagram_file(const std::string& path);
DiagramFile parse_diagram_json(const std::string& text);
std::string diagram_file_to_json(const DiagramFile& f);

}  // namespace q6j
