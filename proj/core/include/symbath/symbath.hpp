// Umbrella header.
#pragma once

#include "symbath/algebra.hpp"
#include "symbath/asymptotic.hpp"
#include "symbath/dynamics.hpp"
#include "symbath/entanglement.hpp"
#include "symbath/io.hpp"
#include "symbath/lindblad.hpp"
#include "symbath/protocol.hpp"
#include "symbath/verify.hpp"
