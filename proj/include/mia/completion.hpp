#pragma once

#include "mia/model.hpp"

namespace mia {

/// Input-enables a MIA by adding a mandatory self-loop (q, i, q) for every
/// state q and input i the state does not accept. Idempotent; existing
/// transitions are never removed or rerouted.
Mia angelic_completion(const Mia& m);

/// Input-enables a MIA by adding a fresh sink state and routing every
/// unaccepted (state, input) pair into it; the sink accepts all inputs and
/// never outputs, so it is both may- and must-quiescent. The sink state is
/// added even when the model is already input-enabled.
Mia chaotic_completion(const Mia& m);

/// Name the chaotic sink would get for this model: "__chaos", suffixed with
/// a counter on collision with an existing state.
std::string chaotic_sink_name(const Mia& m);

}  // namespace mia
