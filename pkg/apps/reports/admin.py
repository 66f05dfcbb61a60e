from django.contrib import admin
from .models import RunReport


@admin.register(RunReport)
class RunReportAdmin(admin.ModelAdmin):
    list_display = [
        'command', 'status', 'row_count', 'failed_count',
        'duration', 'created_at'
    ]
    list_filter = ['status', 'created_at']
    search_fields = ['command', 'inputs_digest']
    ordering = ['-created_at']
    date_hierarchy = 'created_at'

    readonly_fields = ['id', 'created_at', 'updated_at']

    fieldsets = (
        (None, {
            'fields': ('id', 'command', 'status', 'duration')
        }),
        ('Results', {
            'fields': ('results',)
        }),
        ('Inputs', {
            'fields': ('inputs_digest',),
            'classes': ('collapse',)
        }),
        ('Metadata', {
            'fields': ('created_at', 'updated_at'),
            'classes': ('collapse',)
        }),
    )

    def row_count(self, obj):
        return obj.row_count
    row_count.short_description = 'Rows'

    def failed_count(self, obj):
        return len(obj.failed_rows)
    failed_count.short_description = 'Failed'
