// Regenerates the golden/ directory from the embedded example bundles.
// Run from the repository root (or pass the output directory).

#include <filesystem>
#include <fstream>
#include <iostream>

#include "twistprod/json_io.hpp"

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "golden";
  std::filesystem::create_directories(dir);
  for (const std::string& name : twistprod::builtin_names()) {
    const auto path = dir / (name + ".json");
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    out << twistprod::bundle_to_json(twistprod::builtin(name)).dump(2) << "\n";
    std::cout << path.string() << "\n";
  }
  return 0;
}
