// Writes one graph6 line per isomorphism class of graphs on n vertices.
//
//   gen_corpus 5             all graphs on 5 vertices
//   gen_corpus 8 --connected connected graphs only

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "prismfix/generate.hpp"
#include "prismfix/graph_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Enumerate small graphs up to isomorphism as graph6"};
  std::size_t n = 0;
  bool connected = false;
  app.add_option("n", n, "Number of vertices")->required()->check(CLI::Range(0, 10));
  app.add_flag("--connected", connected, "Emit connected graphs only");
  CLI11_PARSE(app, argc, argv);

  for (const auto& g : prismfix::all_graphs(n)) {
    if (connected && !prismfix::is_connected(g)) continue;
    std::cout << prismfix::to_graph6(g) << '\n';
  }
  return 0;
}
