#pragma once

#include "cantor.hpp"
#include "circle.hpp"
#include "completion.hpp"
#include "corpus.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "lamination.hpp"
#include "leafspace.hpp"
#include "planar.hpp"
#include "presentations.hpp"
#include "properties.hpp"
#include "rational.hpp"
#include "render.hpp"
#include "universal.hpp"
