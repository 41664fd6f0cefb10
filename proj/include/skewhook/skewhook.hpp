#pragma once

#include "color_graph.hpp"
#include "colored_poset.hpp"
#include "dcomplete.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "excitation.hpp"
#include "genfun.hpp"
#include "poly.hpp"
#include "poset.hpp"
#include "render.hpp"
#include "roots.hpp"
#include "weyl.hpp"
#include "words.hpp"
