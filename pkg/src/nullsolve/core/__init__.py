"""Shared plumbing: exceptions, arithmetic, instance files, command base and worker pools."""
