#pragma once

#include <string>

#include "qtc/adjacency.hpp"
#include "qtc/coloring.hpp"
#include "qtc/oracle.hpp"
#include "qtc/quadtree.hpp"

namespace qtc {

// quadtree-v1, JSON flavor: {"format":"quadtree-v1","leaves":[[l,x,y],...]}
std::string tree_to_json(const Quadtree& tree);
// Rejects non-canonical leaf order unless recanonicalize is set.
Quadtree tree_from_json(const std::string& text, bool recanonicalize = false);

// quadtree-v1, plain text flavor: header line, then one "level x y" per line.
std::string tree_to_text(const Quadtree& tree);
Quadtree tree_from_text(const std::string& text, bool recanonicalize = false);

// coloring-v1: {"format":"coloring-v1","mode":...,"colors":[[l,x,y,c],...]}
std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const std::string& text,
                            bool recanonicalize = false);

// {"mode":...,"n":N,"edges":[[i,j],...]} with i<j sorted.
std::string graph_to_json(const AdjacencyGraph& g);

// witness-v1: tree + coloring + chi / k_minus_1_exhausted / candidates_tried.
std::string witness_to_json(const WitnessReport& report);

// Sniffs JSON vs text by the first non-space byte.
Quadtree read_tree(const std::string& path, bool recanonicalize = false);
Coloring read_coloring(const std::string& path, bool recanonicalize = false);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qtc
