#pragma once

#include "polyconj/linalg.hpp"
#include "polyconj/lp.hpp"
#include "polyconj/polyhedron.hpp"
#include "polyconj/support.hpp"
#include "polyconj/mapping.hpp"
#include "polyconj/calculus.hpp"
#include "polyconj/plfunc.hpp"
#include "polyconj/oracle.hpp"
#include "polyconj/io.hpp"
#include "polyconj/selfcheck.hpp"
#include "polyconj/problem.hpp"
