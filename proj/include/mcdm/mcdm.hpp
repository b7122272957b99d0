#ifndef MCDM_MCDM_HPP
#define MCDM_MCDM_HPP

#include "mcdm/error.hpp"
#include "mcdm/matrix.hpp"
#include "mcdm/core.hpp"
#include "mcdm/normalization.hpp"
#include "mcdm/linalg.hpp"
#include "mcdm/pairwise.hpp"
#include "mcdm/methods_simple.hpp"
#include "mcdm/methods_ratio.hpp"
#include "mcdm/ahp.hpp"
#include "mcdm/anp.hpp"
#include "mcdm/io.hpp"
#include "mcdm/commands.hpp"

#endif  // MCDM_MCDM_HPP
