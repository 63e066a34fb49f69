#pragma once

#include <string_view>
#include <vector>

namespace lackwalk {

enum class InitialState { Uniform, Stationary };
enum class Engine { Full, Subspace, Analytic };

// Success probability p(0), p(1), ..., p(t_max).
struct EvolutionTrace
{
  std::vector<double> probs;
  Engine engine = Engine::Subspace;

  std::size_t size() const { return probs.size(); }
  double operator[](std::size_t t) const { return probs[t]; }
};

std::string_view to_string(InitialState init);
std::string_view to_string(Engine engine);
InitialState parse_initial_state(std::string_view text);
Engine parse_engine(std::string_view text);

} // namespace lackwalk
