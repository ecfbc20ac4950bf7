#pragma once

// Umbrella header.

#include "frameforge/besselian.hpp"
#include "frameforge/bound.hpp"
#include "frameforge/constructions.hpp"
#include "frameforge/embeddings.hpp"
#include "frameforge/errors.hpp"
#include "frameforge/haar.hpp"
#include "frameforge/json_io.hpp"
#include "frameforge/operator_norms.hpp"
#include "frameforge/paire.hpp"
#include "frameforge/parallel.hpp"
#include "frameforge/random.hpp"
#include "frameforge/space.hpp"
