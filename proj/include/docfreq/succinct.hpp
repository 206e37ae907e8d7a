#pragma once

#include "bit_vector.hpp"
#include "rmq.hpp"
#include "wavelet_tree.hpp"
