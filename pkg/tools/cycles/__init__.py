"""Cycle block tools"""
