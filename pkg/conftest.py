"""Pytest wiring: parse absl flags, which absltest.main() normally does."""

from absl import flags


def pytest_configure(config):
  del config  # Unused.
  flags.FLAGS.mark_as_parsed()
