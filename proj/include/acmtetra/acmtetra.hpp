#pragma once

#include "acmtetra/alexander.hpp"
#include "acmtetra/classifier.hpp"
#include "acmtetra/deciders.hpp"
#include "acmtetra/error.hpp"
#include "acmtetra/graph.hpp"
#include "acmtetra/homology.hpp"
#include "acmtetra/ideal.hpp"
#include "acmtetra/monomial.hpp"
#include "acmtetra/polarization.hpp"
#include "acmtetra/report.hpp"
#include "acmtetra/variables.hpp"
#include "acmtetra/verdict.hpp"
