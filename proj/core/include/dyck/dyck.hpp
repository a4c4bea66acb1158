#pragma once

#include "dyck/ballot.hpp"
#include "dyck/count.hpp"
#include "dyck/error.hpp"
#include "dyck/generate.hpp"
#include "dyck/rank.hpp"
#include "dyck/tree.hpp"
#include "dyck/word.hpp"
