"""Subcommand tools: one Tool per CLI subcommand"""
