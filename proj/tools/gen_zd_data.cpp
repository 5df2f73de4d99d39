// Writes data/zd_<d>.json for d = 2..6 from the builtin z^d datum.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "motdt/json_io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_zd_data <output-dir>\n";
    return 2;
  }
  for (long d = 2; d <= 6; ++d) {
    const std::string path = std::string(argv[1]) + "/zd_" + std::to_string(d) + ".json";
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    out << motdt::datum_to_json(motdt::zd_datum(d)).dump(2) << "\n";
  }
  return 0;
}
