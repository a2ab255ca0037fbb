// concatenate two strings
void concat(char *dst, const char *src)
{
    while (*dst)
        dst++;
    while ((*dst++ = *src++) != '\0')
        ;
}

int main()
{
    char a[200], b[100];
    scanf("%s %s", a, b);
    concat(a, b);
    printf("%s\n", a);
    return 0;
}
