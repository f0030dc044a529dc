#pragma once

#include "tatforge/chain.hpp"
#include "tatforge/errors.hpp"
#include "tatforge/graph.hpp"
#include "tatforge/io.hpp"
#include "tatforge/labeling.hpp"
#include "tatforge/schemes.hpp"
#include "tatforge/search.hpp"
#include "tatforge/trees.hpp"
#include "tatforge/verifier.hpp"
