#include <cstdio>
#include <fstream>

#include "q6j/diagrams.hpp"

using namespace q6j;

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data/diagrams";
  auto write = [&](const DiagramFile& f, const std::string& name) {
    std::ofstream out(dir + "/" + name + ".json");
    out << diagram_file_to_json(f);
    std::printf("wrote %s/%s.json (%zu presentations)\n", dir.c_str(), name.c_str(),
                f.presentations.size());
  };
  write(diagrams::unknot_file(), "unknot");
  write(diagrams::theta_file(), "theta");
  write(diagrams::tetrahedron_file(), "tetrahedron");
  write(diagrams::hopf_file(), "hopf");
  write(diagrams::trefoil_file(), "trefoil");
  write(diagrams::figure_eight_file(), "figure_eight");
  return 0;
}
