#include "braidsplit/braid.hpp"

#include <cstdlib>
#include <string>

namespace braidsplit {

BraidWord::BraidWord(std::size_t strands, std::vector<int> letters)
  : strands_(strands), letters_(std::move(letters))
{
  if (strands < 2)
    throw DomainError("braid word needs at least 2 strands");
  for (int l : letters_)
    if (l == 0 || static_cast<std::size_t>(std::abs(l)) >= strands)
      throw DomainError("braid letter " + std::to_string(l) + " out of range for " +
                        std::to_string(strands) + " strands");
}

BraidEvaluator::BraidEvaluator(std::vector<Permutation> gens) : gens_(std::move(gens))
{
  if (!check_braid_relations(gens_))
    throw InvariantViolation("generators do not satisfy the braid relations");
  for (auto const &g : gens_)
    inverses_.push_back(g.inverse());
}

Permutation BraidEvaluator::evaluate(BraidWord const &word) const
{
  if (word.strands() != gens_.size() + 1)
    throw DomainError("braid word has " + std::to_string(word.strands()) +
                      " strands, evaluator has " + std::to_string(gens_.size() + 1));
  auto out = Permutation::identity(gens_.front().degree());
  for (int l : word.letters()) {
    auto idx = static_cast<std::size_t>(std::abs(l) - 1);
    out = compose(out, l > 0 ? gens_[idx] : inverses_[idx]);
  }
  return out;
}

Permutation evaluate_braid_word(BraidWord const &word, std::vector<Permutation> const &gens)
{
  return BraidEvaluator(gens).evaluate(word);
}

} // namespace braidsplit
