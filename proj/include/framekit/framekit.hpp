#ifndef FRAMEKIT_FRAMEKIT_HPP_
#define FRAMEKIT_FRAMEKIT_HPP_

#include "framekit/types.hpp"
#include "framekit/numerics.hpp"
#include "framekit/frame_core.hpp"
#include "framekit/ovf.hpp"
#include "framekit/constructors.hpp"
#include "framekit/analysis.hpp"
#include "framekit/pframes.hpp"

#endif  // FRAMEKIT_FRAMEKIT_HPP_
