#pragma once

#include "sepball/certifiers.hpp"
#include "sepball/eig.hpp"
#include "sepball/families.hpp"
#include "sepball/io.hpp"
#include "sepball/matrix.hpp"
#include "sepball/nested_norm.hpp"
#include "sepball/norms.hpp"
#include "sepball/oracle.hpp"
#include "sepball/profile.hpp"
#include "sepball/report.hpp"
#include "sepball/state.hpp"
#include "sepball/structured.hpp"
