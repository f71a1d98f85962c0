#pragma once

#include "unicover/body.hpp"
#include "unicover/cover.hpp"
#include "unicover/cover_cayley.hpp"
#include "unicover/cover_para.hpp"
#include "unicover/error.hpp"
#include "unicover/exact_geom.hpp"
#include "unicover/generators.hpp"
#include "unicover/idp.hpp"
#include "unicover/polygon.hpp"
#include "unicover/rational.hpp"
#include "unicover/simplex.hpp"
#include "unicover/triangulate.hpp"
#include "unicover/vec.hpp"
#include "unicover/verify.hpp"
#include "unicover/white.hpp"
