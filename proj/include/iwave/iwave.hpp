#pragma once

// Umbrella header for the iwave library: spectral simulation of interfacial
// waves in a two-layer fluid with an undercurrent-like background shear.

#include "iwave/bvp.hpp"
#include "iwave/cli.hpp"
#include "iwave/config.hpp"
#include "iwave/dispersion.hpp"
#include "iwave/dno.hpp"
#include "iwave/errors.hpp"
#include "iwave/evolution.hpp"
#include "iwave/field.hpp"
#include "iwave/grid.hpp"
#include "iwave/hamiltonian.hpp"
#include "iwave/media.hpp"
#include "iwave/output.hpp"
#include "iwave/shear.hpp"
#include "iwave/spectral.hpp"
#include "iwave/state.hpp"
