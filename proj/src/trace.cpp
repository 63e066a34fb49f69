#include "lackwalk/trace.hpp"

#include <stdexcept>
#include <string>

namespace lackwalk {

std::string_view to_string(InitialState init)
{
  return init == InitialState::Uniform ? "uniform" : "stationary";
}

std::string_view to_string(Engine engine)
{
  switch (engine) {
  case Engine::Full: return "full";
  case Engine::Subspace: return "subspace";
  case Engine::Analytic: return "analytic";
  }
  return "?";
}

InitialState parse_initial_state(std::string_view text)
{
  if (text == "uniform" || text == "s") { return InitialState::Uniform; }
  if (text == "stationary" || text == "sigma") { return InitialState::Stationary; }
  throw std::invalid_argument("unknown initial state '" + std::string(text) + "'");
}

Engine parse_engine(std::string_view text)
{
  if (text == "full") { return Engine::Full; }
  if (text == "subspace") { return Engine::Subspace; }
  if (text == "analytic") { return Engine::Analytic; }
  throw std::invalid_argument("unknown engine '" + std::string(text) + "'");
}

} // namespace lackwalk
