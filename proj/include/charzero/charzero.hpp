#pragma once

#include "chartable.hpp"
#include "corpus.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "hcover.hpp"
#include "partitions.hpp"
#include "table_io.hpp"
#include "vanishing.hpp"
#include "verify.hpp"
#include "zerographs.hpp"
