int main()
{
    char word[300];
    char *ptr;
    scanf("%s", word);
    for (ptr = word; *ptr; ptr++)
        if (*ptr >= 'a' && *ptr <= 'z')
            *ptr = *ptr - 'a' + 'A';
    printf("%s\n", word);
    return 0;
}
