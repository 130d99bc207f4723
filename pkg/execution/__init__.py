"""Tool execution and failure classification"""
