#pragma once

#include <gordian/numeric.hpp>
#include <gordian/polynomial.hpp>
#include <gordian/sturm.hpp>
#include <gordian/laurent.hpp>
#include <gordian/enclosure.hpp>
#include <gordian/circle.hpp>
#include <gordian/cyclotomic.hpp>
#include <gordian/signature.hpp>
#include <gordian/knots.hpp>
#include <gordian/gordian_graph.hpp>
#include <gordian/serialize.hpp>
