#pragma once

#include <string>

#include "yf/formula.hpp"
#include "yf/universe.hpp"
#include "yf/word.hpp"

namespace yf::synth {

/// A defining formula for a single word, as a definition DAG.
struct SynthResult {
  Word target;
  fol::DefinitionSet defs;  // base definitions plus one per word below target
  std::string root;

  /// The generated definitions (base ones excluded) in DSL form.
  std::string text() const;
};

/// Definitions every synthesized set starts from: r, id_eps, id_1, id_2, id_11.
const fol::DefinitionSet& base_definitions();

/// Name of the definition for `w`: the base names for rank <= 2, otherwise
/// id_w followed by the digits.
std::string id_name(const Word& w);

/// For rank(u) <= 2 the root is a base definition. Otherwise
///   id_u(v) = forall w (r(v, w) <-> or_i id_{u_i}(w))
/// over the parents u_i of u, each parent synthesized once.
SynthResult synth_id(const Word& u);

/// True iff the root of synth_id(u) holds exactly at u in U.
/// Requires U.max_rank() >= rank(u) + 1 (std::invalid_argument otherwise).
bool verify_id(const Universe& U, const Word& u);
bool verify_id(const Word& u, std::size_t N);

}  // namespace yf::synth
