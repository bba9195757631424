"""End-to-end tests: oracle suites, the reduction pipeline and the command line."""
