"""Identity check implementations."""
