# Examples package for Cauchy Engine
