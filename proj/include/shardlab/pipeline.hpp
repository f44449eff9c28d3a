#pragma once

#include <cctype>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shardlab/coxeter.hpp"
#include "shardlab/shard_order.hpp"
#include "shardlab/shards.hpp"
#include "shardlab/weak_order.hpp"

namespace shardlab {

// Group, weak order, shards, shard digraph and shard order built once and shared.
struct GroupBundle {
  std::shared_ptr<const CoxeterGroup> group;
  std::shared_ptr<const WeakOrder> weak;
  std::shared_ptr<const ShardStructure> shards;
  ShardDigraph digraph;
  std::shared_ptr<const ShardOrder> order;

  static GroupBundle build(const std::string& type) {
    GroupBundle b;
    b.group = std::make_shared<CoxeterGroup>(CoxeterType::parse(type));
    b.weak = b.group->weak_order();
    b.shards = std::make_shared<ShardStructure>(b.weak);
    b.digraph = b.shards->digraph();
    b.order = std::make_shared<ShardOrder>(b.shards);
    return b;
  }

  const CoxeterGroup& g() const { return *group; }
};

// "s2,s1" or "2,1" -> zero-based generator indices; "e" or "" -> empty word.
inline std::vector<int> parse_word(const std::string& text, int rank) {
  std::vector<int> out;
  if (text.empty() || text == "e") return out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(tok.begin());
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
    if (!tok.empty() && (tok[0] == 's' || tok[0] == 'S')) tok.erase(tok.begin());
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad generator '" + tok + "' in word '" + text + "'");
    const int s = std::stoi(tok);
    if (s < 1 || s > rank) throw std::invalid_argument("generator s" + tok + " out of range 1.." + std::to_string(rank));
    out.push_back(s - 1);
  }
  return out;
}

// A Coxeter element ordering must list each generator exactly once.
inline std::vector<int> parse_coxeter_order(const std::string& text, int rank) {
  auto order = parse_word(text, rank);
  std::vector<bool> seen(rank, false);
  for (int s : order) {
    if (seen[s]) throw std::invalid_argument("generator s" + std::to_string(s + 1) + " repeated in Coxeter element");
    seen[s] = true;
  }
  if (static_cast<int>(order.size()) != rank) throw std::invalid_argument("Coxeter element must use every generator once");
  return order;
}

// Element given by a reduced word; rejects non-reduced words.
inline int element_from_word(const CoxeterGroup& g, const std::string& text) {
  auto word = parse_word(text, g.rank());
  const int w = g.from_word(word);
  if (g.length(w) != static_cast<int>(word.size())) throw std::invalid_argument("word '" + text + "' is not reduced");
  return w;
}

}  // namespace shardlab
